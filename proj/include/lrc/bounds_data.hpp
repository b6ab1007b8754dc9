#pragma once

namespace lrc {

/// Bundled upper bounds on the dimension of [n, k, d]_q linear codes,
/// transcribed from the published tables of best known linear codes.  The
/// analytic chain in kopt_upper covers everything else; rows here are only
/// the entries where the tables beat the analytic bounds and the instances
/// this library certifies.  Same format as the --kopt-table file input.
inline constexpr const char* kBundledKoptTable = R"(# Upper bounds on the dimension k of [n, k, d] linear codes over GF(q).
# Source: published best-known-linear-code tables.
# format: q n d kmax    ('#' starts a comment)
2 15 5 7
2 16 6 7
2 23 7 12
2 24 8 12
2 33 10 13
2 36 6 21
)";

}  // namespace lrc
