#include "qmzv/duality.hpp"

namespace qmzv {

Word tau(const Word& w) {
    const CanonicalForm form = canonical_form(w);
    CanonicalForm reversed;
    reversed.reserve(form.size());
    for (auto it = form.rbegin(); it != form.rend(); ++it)
        reversed.push_back({it->z + 1, it->k - 1});
    return word_of_canonical_form(reversed);
}

LinearCombination tau_lin(const LinearCombination& a) {
    LinearCombination out;
    for (const auto& [w, c] : a.terms()) out.add_term(tau(w), c);
    return out;
}

}  // namespace qmzv
