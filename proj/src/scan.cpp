// Copyright 2026 The qcalab Authors
// SPDX-License-Identifier: Apache-2.0

#include "qca/scan.hpp"

#include <algorithm>
#include <vector>

#include "qca/errors.hpp"
#include "qca/format.hpp"

namespace qca {

ScanTable spectrum_scan(const LatticeSpec& spec, const CoinSet& coin,
                        std::span<const MomentumIndex> path) {
  if (path.empty()) throw InvalidSpec("spectrum_scan: empty momentum path");

  ScanTable table;
  const int d = coin.dim;
  // previous[b] = eigenvector currently carrying branch label b
  ComplexMatrix previous;

  for (std::size_t pos = 0; pos < path.size(); ++pos) {
    const MomentumBlock block = build_block(spec, coin, path[pos]);
    // branch_of[b] = column of block.vectors assigned to branch b
    std::vector<int> branch_of(d);

    if (pos == 0) {
      for (int b = 0; b < d; ++b) branch_of[b] = b;  // phase order
    } else {
      // Greedy maximal-overlap matching against the previous point.
      Eigen::MatrixXd overlap(d, d);
      for (int b = 0; b < d; ++b) {
        for (int c = 0; c < d; ++c) {
          overlap(b, c) =
              std::abs(previous.col(b).dot(block.vectors.col(c)));
        }
      }
      std::vector<bool> row_used(d, false), col_used(d, false);
      for (int step = 0; step < d; ++step) {
        int best_b = -1, best_c = -1;
        double best = -1.0;
        for (int b = 0; b < d; ++b) {
          if (row_used[b]) continue;
          for (int c = 0; c < d; ++c) {
            if (col_used[c]) continue;
            if (overlap(b, c) > best) {
              best = overlap(b, c);
              best_b = b;
              best_c = c;
            }
          }
        }
        // Near-tie: fall back to phase order (lowest available column)
        // and report the ambiguity.
        for (int c = 0; c < d; ++c) {
          if (col_used[c] || c == best_c) continue;
          if (best - overlap(best_b, c) < 1e-9) {
            table.ambiguities.push_back({pos, best_b, best - overlap(best_b, c)});
            best_c = std::min(best_c, c);
          }
        }
        row_used[best_b] = true;
        col_used[best_c] = true;
        branch_of[best_b] = best_c;
      }
    }

    ComplexMatrix carried(d, d);
    for (int b = 0; b < d; ++b) {
      carried.col(b) = block.vectors.col(branch_of[b]);
      table.rows.push_back(
          {block.index, block.k, b, block.phases[branch_of[b]]});
    }
    previous = std::move(carried);
  }
  return table;
}

void write_scan_csv(std::ostream& out, const ScanTable& table) {
  out << "n,o,p,kx,ky,kz,branch,phase\n";
  for (const ScanRow& row : table.rows) {
    out << row.index.n << ',' << row.index.o << ',' << row.index.p << ','
        << format_double(row.k.x()) << ',' << format_double(row.k.y()) << ','
        << format_double(row.k.z()) << ',' << row.branch << ','
        << format_double(row.phase) << '\n';
  }
}

}  // namespace qca
