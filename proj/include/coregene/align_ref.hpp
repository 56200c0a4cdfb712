#pragma once

#include "coregene/align.hpp"

#include <string_view>

namespace coregene {

/// Serial reference aligner: same contract as align_global, written
/// independently with full score matrices kept in memory and the traceback
/// re-derived from them. Used as the correctness oracle in tests and as the
/// baseline in the benchmark; not used by the production pipeline.
AlignmentResult align_global_ref(std::string_view x, std::string_view y,
                                 const AlignmentParams& params = {});

} // namespace coregene
