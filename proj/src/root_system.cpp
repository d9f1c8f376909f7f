#include "f4/root_system.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>

namespace f4 {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// True when s[0] is an opening bracket whose partner is the last character.
bool wrapped(std::string_view s) {
  if (s.size() < 2 || (s.front() != '(' && s.front() != '[')) return false;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(' || s[i] == '[') ++depth;
    if (s[i] == ')' || s[i] == ']') --depth;
    if (depth == 0) return i + 1 == s.size();
  }
  return false;
}

std::vector<Quat> simple_roots(SystemName name) {
  const FieldScalar r = FieldScalar::sqrt2();
  const FieldScalar h = r / 2;
  switch (name) {
    case SystemName::F4:
      return {Quat(h, -h, -h, -h), Quat(0, 0, 0, r), Quat(0, 0, 1, -1), Quat(0, 1, -1, 0)};
    case SystemName::B4:
      return {Quat(1, -1, 0, 0), Quat(0, 1, -1, 0), Quat(0, 0, 1, -1), Quat(0, 0, 0, r)};
    case SystemName::B3R:
      return {Quat(0, 0, 0, r), Quat(0, 0, 1, -1), Quat(0, 1, -1, 0)};
  }
  throw std::invalid_argument("unknown root system");
}

GroupName weyl_group_of(SystemName name) {
  switch (name) {
    case SystemName::F4: return GroupName::WF4;
    case SystemName::B4: return GroupName::WB4;
    case SystemName::B3R: return GroupName::WB3R;
  }
  throw std::invalid_argument("unknown root system");
}

}  // namespace

std::string to_string(SystemName name) {
  switch (name) {
    case SystemName::F4: return "F4";
    case SystemName::B4: return "B4";
    case SystemName::B3R: return "B3";
  }
  return "?";
}

OrbitLabel OrbitLabel::parse(std::string_view text) {
  text = trim(text);
  if (wrapped(text)) text = trim(text.substr(1, text.size() - 2));
  std::vector<FieldScalar> a;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')') --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      a.push_back(FieldScalar::parse(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  return OrbitLabel(std::move(a));
}

bool OrbitLabel::is_dominant() const {
  for (const auto& x : a_) {
    if (x.sign() < 0) return false;
  }
  return true;
}

bool OrbitLabel::is_zero() const {
  for (const auto& x : a_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

std::vector<int> OrbitLabel::active_nodes() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (!a_[i].is_zero()) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::string OrbitLabel::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (i) out += ",";
    out += a_[i].pretty();
  }
  return out + ")";
}

std::strong_ordering operator<=>(const OrbitLabel& a, const OrbitLabel& b) {
  if (auto c = a.a_.size() <=> b.a_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.a_.size(); ++i) {
    if (auto c = a.a_[i] <=> b.a_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

int RootSystem::coxeter_m(int i, int j) const {
  if (i == j) return 1;
  const FieldScalar p = cartan(i, j) * cartan(j, i);
  if (p == FieldScalar(0)) return 2;
  if (p == FieldScalar(1)) return 3;
  if (p == FieldScalar(2)) return 4;
  if (p == FieldScalar(3)) return 6;
  throw std::logic_error("Cartan matrix entry pair is not crystallographic");
}

FieldMatrix exact_inverse(const FieldMatrix& m) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("exact_inverse: matrix is not square");
  FieldMatrix a = m;
  FieldMatrix inv = FieldMatrix::Identity(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw std::domain_error("exact_inverse: matrix is singular");
    a.row(col).swap(a.row(pivot));
    inv.row(col).swap(inv.row(pivot));
    const FieldScalar s = a(col, col).inverse().value();
    a.row(col) *= s;
    inv.row(col) *= s;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      const FieldScalar f = a(r, col);
      a.row(r) -= f * a.row(col);
      inv.row(r) -= f * inv.row(col);
    }
  }
  return inv;
}

int exact_rank(const std::vector<Quat>& vectors) {
  std::vector<Quat::Coefficients> rows;
  for (const Quat& v : vectors) rows.push_back(v.coeffs());
  int rank = 0;
  for (int col = 0; col < 4 && rank < static_cast<int>(rows.size()); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot](col).is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const FieldScalar inv = rows[rank](col).inverse().value();
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r](col).is_zero()) continue;
      const FieldScalar f = rows[r](col) * inv;
      rows[r] -= f * rows[rank];
    }
    ++rank;
  }
  return rank;
}

RootSystem build_root_system(SystemName name) {
  RootSystem sys;
  sys.name = name;
  sys.simple_roots = simple_roots(name);
  sys.weyl_group = weyl_group_of(name);
  const auto n = static_cast<Eigen::Index>(sys.rank());
  sys.gram.resize(n, n);
  sys.cartan.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      sys.gram(i, j) = scalar_product(sys.simple_roots[i], sys.simple_roots[j]);
    }
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      sys.cartan(i, j) = FieldScalar(2) * sys.gram(i, j) / sys.gram(j, j);
    }
  }
  sys.cartan_inv = exact_inverse(sys.cartan);
  // w_j = (a_j, a_j) / 2 * sum_k (G^-1)_jk a_k gives 2 (w_j, a_i) / (a_i, a_i) = delta_ij.
  const FieldMatrix ginv = exact_inverse(sys.gram);
  for (Eigen::Index j = 0; j < n; ++j) {
    Quat w;
    for (Eigen::Index k = 0; k < n; ++k) {
      w += sys.simple_roots[k] * (ginv(j, k) * sys.gram(j, j) / 2);
    }
    sys.weights.push_back(w);
  }
  for (const Quat& alpha : sys.simple_roots) sys.reflections.push_back(reflection(alpha));
  return sys;
}

const RootSystem& root_system(SystemName name) {
  static std::mutex mutex;
  static std::unique_ptr<RootSystem> cache[3];
  std::lock_guard lock(mutex);
  auto& slot = cache[static_cast<int>(name)];
  if (!slot) slot = std::make_unique<RootSystem>(build_root_system(name));
  return *slot;
}

Quat label_to_vector(const RootSystem& sys, const OrbitLabel& label) {
  if (label.rank() != sys.rank())
    throw std::invalid_argument("label " + label.str() + " has wrong rank for " +
                                to_string(sys.name));
  Quat v;
  for (std::size_t i = 0; i < sys.rank(); ++i) {
    if (!label[i].is_zero()) v += sys.weights[i] * label[i];
  }
  return v;
}

OrbitLabel vector_to_label(const RootSystem& sys, const Quat& v) {
  std::vector<FieldScalar> a;
  for (std::size_t i = 0; i < sys.rank(); ++i) {
    const Quat& alpha = sys.simple_roots[i];
    a.push_back(FieldScalar(2) * scalar_product(v, alpha) / sys.gram(i, i));
  }
  return OrbitLabel(std::move(a));
}

GroupElement simple_reflection(const RootSystem& sys, int i) {
  return sys.reflections.at(static_cast<std::size_t>(i));
}

DominantForm dominant_representative(const RootSystem& sys, const Quat& v) {
  DominantForm out{vector_to_label(sys, v), v, GroupElement::identity()};
  // Each step strictly raises the vector in the dominance order, so the loop terminates.
  for (int guard = 0; guard < 100000; ++guard) {
    int neg = -1;
    for (std::size_t i = 0; i < out.label.rank(); ++i) {
      if (out.label[i].sign() < 0) {
        neg = static_cast<int>(i);
        break;
      }
    }
    if (neg < 0) return out;
    out.vector = reflect_classical(sys.simple_roots[neg], out.vector);
    out.witness = compose(simple_reflection(sys, neg), out.witness);
    out.label = vector_to_label(sys, out.vector);
  }
  throw std::logic_error("dominant_representative did not terminate");
}

}  // namespace f4
