#include "coregene/align.hpp"

#include "coregene/errors.hpp"

#include <limits>
#include <string>
#include <vector>

namespace coregene {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// DP states: M = x[i] aligned to y[j] (diagonal), X = gap in y (up),
// Y = gap in x (left).
enum : unsigned char { kFromM = 0, kFromX = 1, kFromY = 2 };

// Max of three with the pinned tie order M, then X, then Y.
inline unsigned char pick3(double m, double x, double y, double& best) {
    unsigned char which = kFromM;
    best = m;
    if (x > best) { best = x; which = kFromX; }
    if (y > best) { best = y; which = kFromY; }
    return which;
}

void check_input(std::string_view s, const char* which) {
    if (s.empty())
        throw ComputeError(std::string("align_global: empty ") + which + " sequence");
    for (char c : s) {
        if (c != 'A' && c != 'C' && c != 'G' && c != 'T')
            throw ComputeError(std::string("align_global: ") + which +
                               " contains '" + c + "', expected only {A,C,G,T}");
    }
}

} // namespace

void AlignmentParams::validate() const {
    if (!(gap_open > 0.0))
        throw ConfigError("alignment params: gap_open must be > 0");
    if (!(gap_extend > 0.0))
        throw ConfigError("alignment params: gap_extend must be > 0");
    if (!(match_score > mismatch_score))
        throw ConfigError("alignment params: match_score must exceed mismatch_score");
}

AlignmentResult align_global(std::string_view x, std::string_view y,
                             const AlignmentParams& params) {
    params.validate();
    check_input(x, "first");
    check_input(y, "second");

    const std::size_t n = x.size();
    const std::size_t m = y.size();
    const double open = params.gap_open;
    const double ext = params.gap_extend;

    // Two score rows per matrix; full packed traceback:
    // bits 0-1 = predecessor of M, 2-3 of X, 4-5 of Y.
    std::vector<double> m_prev(m + 1), x_prev(m + 1), y_prev(m + 1);
    std::vector<double> m_cur(m + 1), x_cur(m + 1), y_cur(m + 1);
    std::vector<unsigned char> tb((n + 1) * (m + 1), 0);

    m_prev[0] = 0.0;
    x_prev[0] = kNegInf;
    y_prev[0] = kNegInf;
    for (std::size_t j = 1; j <= m; ++j) {
        m_prev[j] = kNegInf;
        x_prev[j] = kNegInf;
        double best;
        const unsigned char w =
            pick3(m_prev[j - 1] - open, x_prev[j - 1] - open, y_prev[j - 1] - ext, best);
        y_prev[j] = best;
        tb[j] = static_cast<unsigned char>(w << 4);
    }

    for (std::size_t i = 1; i <= n; ++i) {
        unsigned char* tb_row = tb.data() + i * (m + 1);
        m_cur[0] = kNegInf;
        y_cur[0] = kNegInf;
        {
            double best;
            const unsigned char w =
                pick3(m_prev[0] - open, x_prev[0] - ext, y_prev[0] - open, best);
            x_cur[0] = best;
            tb_row[0] = static_cast<unsigned char>(w << 2);
        }
        const char xi = x[i - 1];
        for (std::size_t j = 1; j <= m; ++j) {
            const double s = (xi == y[j - 1]) ? params.match_score : params.mismatch_score;
            double bm, bx, by;
            const unsigned char wm = pick3(m_prev[j - 1], x_prev[j - 1], y_prev[j - 1], bm);
            const unsigned char wx = pick3(m_prev[j] - open, x_prev[j] - ext, y_prev[j] - open, bx);
            const unsigned char wy = pick3(m_cur[j - 1] - open, x_cur[j - 1] - open, y_cur[j - 1] - ext, by);
            m_cur[j] = bm + s;
            x_cur[j] = bx;
            y_cur[j] = by;
            tb_row[j] = static_cast<unsigned char>(wm | (wx << 2) | (wy << 4));
        }
        m_prev.swap(m_cur);
        x_prev.swap(x_cur);
        y_prev.swap(y_cur);
    }

    AlignmentResult result;
    unsigned char state = pick3(m_prev[m], x_prev[m], y_prev[m], result.score);

    std::size_t i = n, j = m;
    while (i > 0 || j > 0) {
        const unsigned char cell = tb[i * (m + 1) + j];
        ++result.alignment_length;
        if (state == kFromM) {
            if (x[i - 1] == y[j - 1]) ++result.identities;
            state = cell & 3u;
            --i;
            --j;
        } else if (state == kFromX) {
            state = (cell >> 2) & 3u;
            --i;
        } else {
            state = (cell >> 4) & 3u;
            --j;
        }
    }

    result.similarity =
        static_cast<double>(result.identities) / static_cast<double>(result.alignment_length);
    return result;
}

double similarity(std::string_view x, std::string_view y, const AlignmentParams& params) {
    return align_global(x, y, params).similarity;
}

} // namespace coregene
