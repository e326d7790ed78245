#pragma once

#include <ostream>
#include <sstream>
#include <string>

#include "k3cert/linsys/linmap.hpp"
#include "k3cert/linsys/subspace.hpp"

namespace k3cert {

// Text dump of matrices and subspaces, stable across runs:
//
//   # matrix <name> <rows>x<cols> <source piece> -> <target piece>
//   columns <monomial> <monomial> ...
//   row <target monomial> <coeff> <coeff> ...
//   end
//
//   # subspace <name> dim <k> in <piece>
//   columns <monomial> ...
//   row <index> <coeff> ...
//   end
//
// Coefficients are "p/q" or "p"; rows are listed row-major.

namespace detail {

inline void dump_columns(std::ostream& os, const GradedPiece& piece) {
  os << "columns";
  for (const auto& m : piece.basis()) os << ' ' << m.to_string(*piece.ring());
  os << '\n';
}

}  // namespace detail

inline void dump(std::ostream& os, const std::string& name, const LinMapQ& map) {
  const Matrix& m = map.matrix();
  os << "# matrix " << name << ' ' << m.rows() << 'x' << m.cols() << ' ' << map.source().label() << " -> "
     << map.target().label() << '\n';
  detail::dump_columns(os, map.source());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << "row " << map.target().basis()[r].to_string(*map.target().ring());
    for (std::size_t c = 0; c < m.cols(); ++c) os << ' ' << m(r, c).to_string();
    os << '\n';
  }
  os << "end\n";
}

inline void dump(std::ostream& os, const std::string& name, const Subspace& s) {
  os << "# subspace " << name << " dim " << s.dim() << " in " << s.ambient().label() << '\n';
  detail::dump_columns(os, s.ambient());
  for (std::size_t r = 0; r < s.dim(); ++r) {
    os << "row " << r;
    for (std::size_t c = 0; c < s.ambient().dim(); ++c) os << ' ' << s.rows()(r, c).to_string();
    os << '\n';
  }
  os << "end\n";
}

template <typename T>
std::string dump_string(const std::string& name, const T& value) {
  std::ostringstream os;
  dump(os, name, value);
  return os.str();
}

}  // namespace k3cert
