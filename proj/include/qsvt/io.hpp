#pragma once

#include <string>

#include "qsvt/sampled_matrix.hpp"

namespace qsvt {

/// Matrix interchange formats.
///
/// Text: UTF-8 CSV with header `i,j,re,im` (zero-based indices) holding the
/// nonzero entries, plus a JSON sidecar `{"m": ..., "n": ...}` declaring
/// dimensions. By convention the sidecar lives at csv_path + ".json".
///
/// Binary snapshot: magic "QSMX", u32 format version, u64 m, n, nnz, then
/// nnz records of (u64 i, u64 j, f64 re, f64 im), all little-endian.

std::string sidecar_path(const std::string& csv_path);

void save_csv(const SampledMatrix& M, const std::string& csv_path);
SampledMatrix load_csv(const std::string& csv_path);

void save_snapshot(const SampledMatrix& M, const std::string& path);
SampledMatrix load_snapshot(const std::string& path);

}  // namespace qsvt
