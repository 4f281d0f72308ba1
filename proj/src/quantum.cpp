#include "ybwb/quantum.hpp"

#include <sstream>

#include "ybwb/boundary.hpp"
#include "ybwb/triples.hpp"

namespace ybwb {

bool cube_zero(const QTensor2& b) {
  QBigMatrix m = to_matrix(b);
  return (m * m * m).is_zero();
}

PBigMatrix exp_quantize(const QTensor2& b) {
  if (!cube_zero(b)) throw std::domain_error("exp_quantize: cube is not zero");
  int n2 = b.n() * b.n();
  QBigMatrix m = to_matrix(b);
  QBigMatrix m2 = m * m;
  PBigMatrix out = PBigMatrix::identity(n2);
  for (const auto& [rc, v] : m.entries()) out.add(rc.first, rc.second, TPoly::t(1, v));
  for (const auto& [rc, v] : m2.entries()) out.add(rc.first, rc.second, TPoly::t(2, v / 2));
  return out;
}

std::vector<CubeZeroRecord> cube_zero_sweep(int max_n) {
  int limit = guard_limit(12);
  if (max_n > limit)
    throw std::domain_error("cube_zero_sweep: max_n exceeds guard (" + std::to_string(limit) + ")");
  std::vector<CubeZeroRecord> out;
  for (int n = 3; n <= max_n; ++n) {
    CubeZeroRecord rec;
    rec.n = n;
    QTensor2 b = b_cg_closed(n);
    rec.cube_zero = cube_zero(b);
    if (rec.cube_zero) rec.qybe = qybe_check(exp_quantize(b), n);
    out.push_back(rec);
  }
  return out;
}

namespace {

template <class R>
std::string grid_impl(const BigMatrix<R>& m) {
  int d = m.dim();
  std::vector<std::vector<std::string>> cells(static_cast<size_t>(d),
                                              std::vector<std::string>(static_cast<size_t>(d), "0"));
  std::vector<size_t> width(static_cast<size_t>(d), 1);
  for (const auto& [rc, v] : m.entries()) {
    std::string s = to_string(v);
    cells[static_cast<size_t>(rc.first - 1)][static_cast<size_t>(rc.second - 1)] = s;
    width[static_cast<size_t>(rc.second - 1)] = std::max(width[static_cast<size_t>(rc.second - 1)], s.size());
  }
  std::ostringstream os;
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      const std::string& s = cells[static_cast<size_t>(r)][static_cast<size_t>(c)];
      os << std::string(width[static_cast<size_t>(c)] - s.size(), ' ') << s;
      os << (c + 1 == d ? "\n" : "  ");
    }
  }
  return os.str();
}

}  // namespace

std::string grid_format(const PBigMatrix& m) { return grid_impl(m); }
std::string grid_format(const QBigMatrix& m) { return grid_impl(m); }

}  // namespace ybwb
