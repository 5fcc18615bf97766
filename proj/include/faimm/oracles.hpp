#pragma once

#include <optional>

#include "faimm/boolfun.hpp"

namespace faimm {

/// Exhaustive annihilator search: tries every g spanned by monomials of
/// degree <= e, with no linear algebra. Throws SearchSpaceError past 2^24
/// candidates.
bool has_annihilator_brute(const BooleanFunction& f, int e);

/// Smallest e with has_annihilator_brute(f, e); nullopt for all-ones.
std::optional<int> lda_brute(const BooleanFunction& f);

/// min(lda_brute(f), lda_brute(1+f)), stopping as soon as either side hits.
int ai_brute(const BooleanFunction& f);

}  // namespace faimm
