#pragma once

#include <string_view>

namespace coregene {

/// Scoring for global alignment with affine gaps, defaulting to the
/// EMBOSS needle DNA setup: EDNAFULL match/mismatch on {A,C,G,T} and
/// gap penalties 10.0 (open) / 0.5 (extend).
///
/// Gap cost convention: a gap run of length L costs
/// gap_open + (L - 1) * gap_extend. End gaps are penalized.
struct AlignmentParams {
    double gap_open = 10.0;
    double gap_extend = 0.5;
    double match_score = 5.0;
    double mismatch_score = -4.0;

    /// Throws ConfigError unless gap_open > 0, gap_extend > 0 and
    /// match_score > mismatch_score.
    void validate() const;
};

struct AlignmentResult {
    double score = 0.0;              // optimal DP score
    std::size_t identities = 0;      // matching columns of the traceback
    std::size_t alignment_length = 0;
    double similarity = 0.0;         // identities / alignment_length
};

/// Needleman-Wunsch global alignment with affine gaps (Gotoh three-matrix
/// recurrence). Traceback is deterministic: ties prefer diagonal, then up,
/// then left. Linear-space score rows plus a packed per-cell decision
/// matrix; this is the production kernel used by the batch drivers.
///
/// Throws ComputeError on empty input or characters outside {A,C,G,T}.
AlignmentResult align_global(std::string_view x, std::string_view y,
                             const AlignmentParams& params = {});

/// d(x, y) = align_global(x, y).similarity. Symmetric, d(x, x) = 1.
double similarity(std::string_view x, std::string_view y,
                  const AlignmentParams& params = {});

} // namespace coregene
