#include "kmat/coords.hpp"

#include <algorithm>

#include "kmat/errors.hpp"

namespace kmat {

std::string ClassicalName::str() const {
  const char* pre = series == Series::SU ? "su" : series == Series::SO ? "so" : "sp";
  return pre + std::to_string(n);
}

ClassicalName ClassicalName::parse(const std::string& s) {
  if (s.size() < 3) throw invalid_input("bad group name: " + s);
  std::string pre = s.substr(0, 2);
  int n = 0;
  try {
    n = std::stoi(s.substr(2));
  } catch (...) {
    throw invalid_input("bad group name: " + s);
  }
  if (n < 1) throw invalid_input("bad group name: " + s);
  Series ser;
  if (pre == "su") ser = Series::SU;
  else if (pre == "so") ser = Series::SO;
  else if (pre == "sp") ser = Series::SP;
  else throw invalid_input("bad group name: " + s);
  if (ser == Series::SP && n % 2 != 0)
    throw invalid_input("sp(n) needs even n: " + s);
  return {ser, n};
}

int eps_dim(ClassicalName g) {
  switch (g.series) {
    case Series::SU: return g.n;
    case Series::SO: return g.n / 2;
    case Series::SP: return g.n / 2;
  }
  return 0;
}

std::vector<AlgebraId> simple_factors(ClassicalName g) {
  switch (g.series) {
    case Series::SU:
      if (g.n <= 1) return {};
      return {AlgebraId::make(Family::A, g.n - 1)};
    case Series::SP:
      return {AlgebraId::make(Family::C, g.n / 2)};
    case Series::SO:
      switch (g.n) {
        case 1: return {};
        case 2: return {};
        case 3: return {AlgebraId::make(Family::A, 1)};
        case 4:
          return {AlgebraId::make(Family::A, 1), AlgebraId::make(Family::A, 1)};
        case 6: return {AlgebraId::make(Family::A, 3)};
        default:
          if (g.n % 2 == 1) return {AlgebraId::make(Family::B, g.n / 2)};
          return {AlgebraId::make(Family::D, g.n / 2)};
      }
  }
  return {};
}

bool is_abelian(ClassicalName g) { return g.series == Series::SO && g.n == 2; }

long group_dim(ClassicalName g) {
  long n = g.n;
  switch (g.series) {
    case Series::SU: return n * n - 1;
    case Series::SO: return n * (n - 1) / 2;
    case Series::SP: return n / 2 * (n + 1);
  }
  return 0;
}

namespace {

std::vector<Rat> su_labels(const std::vector<Rat>& y) {
  std::vector<Rat> out;
  for (size_t j = 0; j + 1 < y.size(); ++j) out.push_back(y[j] - y[j + 1]);
  return out;
}

std::vector<Rat> su_coords(int n, const std::vector<Rat>& a) {
  // y_j = a_j + ... + a_{n-1}, y_n = 0 (representative of the shift class)
  std::vector<Rat> y(static_cast<size_t>(n), Rat(0));
  for (int j = n - 2; j >= 0; --j) y[j] = y[j + 1] + a[j];
  return y;
}

// so(6) <-> A3: eps_i -> L1+L_{i+1}, so a weight x maps to the su(4)
// L-vector ((x1+x2+x3), x1, x2, x3).
std::vector<Rat> so6_labels(const std::vector<Rat>& x) {
  return {x[1] + x[2], x[0] - x[1], x[1] - x[2]};
}

std::vector<Rat> so6_coords(const std::vector<Rat>& a) {
  std::vector<Rat> y = su_coords(4, a);
  Rat mean = (y[0] + y[1] + y[2] + y[3]) / 4;
  for (auto& v : y) v -= mean;
  return {y[0] + y[1], y[0] + y[2], y[0] + y[3]};
}

}  // namespace

std::vector<Rat> labels_from_eps(ClassicalName g, const std::vector<Rat>& x) {
  if (static_cast<int>(x.size()) != eps_dim(g))
    throw invalid_input("eps coordinate length mismatch for " + g.str());
  switch (g.series) {
    case Series::SU:
      if (g.n == 1) return {};
      return su_labels(x);
    case Series::SP: {
      int m = g.n / 2;
      std::vector<Rat> out;
      for (int i = 0; i + 1 < m; ++i) out.push_back(x[i] - x[i + 1]);
      out.push_back(x[m - 1]);
      return out;
    }
    case Series::SO: {
      int k = g.n / 2;
      switch (g.n) {
        case 1:
        case 2: return {};
        case 3: return {2 * x[0]};
        case 4: return {x[0] + x[1], x[0] - x[1]};
        case 6: return so6_labels(x);
        default:
          if (g.n % 2 == 1) {
            std::vector<Rat> out;
            for (int i = 0; i + 1 < k; ++i) out.push_back(x[i] - x[i + 1]);
            out.push_back(2 * x[k - 1]);
            return out;
          } else {
            std::vector<Rat> out;
            for (int i = 0; i + 2 < k; ++i) out.push_back(x[i] - x[i + 1]);
            out.push_back(x[k - 2] - x[k - 1]);
            out.push_back(x[k - 2] + x[k - 1]);
            return out;
          }
      }
    }
  }
  return {};
}

std::vector<Rat> eps_from_labels(ClassicalName g, const std::vector<Rat>& a) {
  switch (g.series) {
    case Series::SU:
      return su_coords(g.n, a);
    case Series::SP: {
      int m = g.n / 2;
      std::vector<Rat> x(static_cast<size_t>(m), Rat(0));
      x[m - 1] = a[m - 1];
      for (int i = m - 2; i >= 0; --i) x[i] = x[i + 1] + a[i];
      return x;
    }
    case Series::SO: {
      int k = g.n / 2;
      switch (g.n) {
        case 3: return {a[0] / 2};
        case 4: return {(a[0] + a[1]) / 2, (a[0] - a[1]) / 2};
        case 6: return so6_coords(a);
        default:
          if (g.n % 2 == 1) {
            std::vector<Rat> x(static_cast<size_t>(k), Rat(0));
            x[k - 1] = a[k - 1] / 2;
            for (int i = k - 2; i >= 0; --i) x[i] = x[i + 1] + a[i];
            return x;
          } else {
            std::vector<Rat> x(static_cast<size_t>(k), Rat(0));
            x[k - 1] = (a[k - 1] - a[k - 2]) / 2;
            x[k - 2] = (a[k - 1] + a[k - 2]) / 2;
            for (int i = k - 3; i >= 0; --i) x[i] = x[i + 1] + a[i];
            return x;
          }
      }
    }
  }
  return {};
}

namespace {

Labels integral_labels(const std::vector<Rat>& lab) {
  Labels out;
  for (const auto& v : lab) {
    Rat c = v;
    c.canonicalize();
    if (c.get_den() != 1)
      throw invalid_input("representation label is not integral");
    out.push_back(c.get_num().get_si());
  }
  return out;
}

Labels from_eps_integral(ClassicalName g, std::vector<Rat> eps) {
  return integral_labels(labels_from_eps(g, eps));
}

}  // namespace

Labels named_rep_labels(ClassicalName g, const std::string& name) {
  std::vector<AlgebraId> factors = simple_factors(g);
  if (factors.size() != 1)
    throw invalid_input("no canonical simple algebra for " + g.str());
  AlgebraId alg = factors[0];
  int k = eps_dim(g);
  auto eps_unit = [&](int i) {
    std::vector<Rat> e(static_cast<size_t>(k), Rat(0));
    e[i] = 1;
    return e;
  };
  if (name == "adjoint") return adjoint_highest_weight(alg);
  if (g.series == Series::SU) {
    if (name == "defining" || name == "fund1") {
      Labels w(static_cast<size_t>(alg.rank), 0);
      w[0] = 1;
      return w;
    }
  } else if (g.series == Series::SO) {
    if (name == "vector") return from_eps_integral(g, eps_unit(0));
    std::vector<Rat> half(static_cast<size_t>(k), rat(1, 2));
    if (g.n % 2 == 1 && name == "spinor") return from_eps_integral(g, half);
    if (g.n % 2 == 0 && (name == "spinor" || name == "spinor+"))
      return from_eps_integral(g, half);
    if (g.n % 2 == 0 && name == "spinor-") {
      half[k - 1] = -half[k - 1];
      return from_eps_integral(g, half);
    }
  } else if (g.series == Series::SP) {
    if (name == "defining" || name == "fund1") return from_eps_integral(g, eps_unit(0));
  }
  if (name.rfind("fund", 0) == 0) {
    int i = std::stoi(name.substr(4));
    if (i < 1 || i > alg.rank)
      throw invalid_input("fundamental index out of range for " + alg.name());
    Labels w(static_cast<size_t>(alg.rank), 0);
    w[i - 1] = 1;
    return w;
  }
  throw invalid_input("unknown representation name '" + name + "' for " +
                      g.str());
}

}  // namespace kmat
