#include "coxfold/roots.hpp"

#include <algorithm>

#include "coxfold/errors.hpp"

namespace coxfold {

Surd form_value(Label m) {
  if (m.is_infinite()) return Surd(-2);
  switch (m.value()) {
    case 1:
      return Surd(2);
    case 2:
      return Surd(0);
    case 3:
      return Surd(-1);
    case 4:
      return -Surd::radical(2);
    case 5:
      return (Surd(-1) - Surd::radical(5)) * Surd(Rational(1, 2));
    case 6:
      return -Surd::radical(3);
    default:
      throw UnsupportedLabel("label " + m.to_string() +
                             " has no exact form value in Q(sqrt2, sqrt3, sqrt5)");
  }
}

FormMatrix::FormMatrix(const CoxeterGraph& graph) : entries_(graph.size(), graph.size()) {
  for (int i = 0; i < graph.size(); ++i)
    for (int j = 0; j < graph.size(); ++j) entries_(i, j) = form_value(graph.label(i, j));
}

Surd bilinear(const Matrix& form, const Vector& x, const Vector& y) {
  if (x.size() != form.rows() || y.size() != form.rows())
    throw DimensionMismatch("bilinear: vectors of size " + std::to_string(x.size()) + " and " +
                            std::to_string(y.size()) + " against a form of size " +
                            std::to_string(form.rows()));
  Surd total;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (x(i).is_zero()) continue;
    Surd row;
    for (Eigen::Index j = 0; j < y.size(); ++j)
      if (!y(j).is_zero() && !form(i, j).is_zero()) row += form(i, j) * y(j);
    total += x(i) * row;
  }
  return total;
}

Vector unit_vector(int n, int position) {
  Vector v = Vector::Zero(n);
  v(position) = Surd(1);
  return v;
}

GroupElement::GroupElement(Word word, Matrix matrix, Matrix inverse)
    : word_(std::move(word)), matrix_(std::move(matrix)), inverse_(std::move(inverse)) {}

GroupElement GroupElement::identity(int n) {
  return GroupElement({}, Matrix::Identity(n, n), Matrix::Identity(n, n));
}

GroupElement GroupElement::inverse() const {
  Word w(word_.rbegin(), word_.rend());  // generators are involutions
  return GroupElement(std::move(w), inverse_, matrix_);
}

Vector GroupElement::apply(const Vector& x) const {
  if (x.size() != matrix_.cols()) throw DimensionMismatch("apply: vector size mismatch");
  return mul(matrix_, x);
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  if (a.dimension() != b.dimension()) throw DimensionMismatch("product of elements of different dimension");
  Word w = a.word_;
  w.insert(w.end(), b.word_.begin(), b.word_.end());
  return GroupElement(std::move(w), mul(a.matrix_, b.matrix_), mul(b.inverse_, a.inverse_));
}

SparseAction::SparseAction(const Matrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    bool identity_row = true;
    for (Eigen::Index j = 0; j < m.cols() && identity_row; ++j)
      identity_row = m(i, j) == Surd(i == j ? 1 : 0);
    if (identity_row) continue;
    Row row{static_cast<int>(i), {}};
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) row.terms.emplace_back(static_cast<int>(j), m(i, j));
    rows_.push_back(std::move(row));
  }
}

Vector SparseAction::apply(const Vector& x) const {
  Vector y = x;
  for (const Row& row : rows_) {
    Surd value;
    for (const auto& [j, c] : row.terms)
      if (!x(j).is_zero()) value += c * x(j);
    y(row.index) = std::move(value);
  }
  return y;
}

GroupElement simple_reflection_matrix(const CoxeterGraph& graph, int position) {
  const int n = graph.size();
  Matrix m = Matrix::Identity(n, n);
  for (int t = 0; t < n; ++t) m(position, t) -= form_value(graph.label(position, t));
  return GroupElement({GeneratorTag::simple(position)}, m, m);
}

CanonicalRepresentation::CanonicalRepresentation(const CoxeterGraph& graph)
    : graph_(graph), form_(graph) {
  for (int s = 0; s < graph.size(); ++s) {
    reflections_.push_back(simple_reflection_matrix(graph, s));
    actions_.emplace_back(reflections_.back().matrix());
  }
}

GroupElement CanonicalRepresentation::element(const Word& word) const {
  GroupElement out = GroupElement::identity(dimension());
  for (const GeneratorTag& tag : word) {
    if (tag.kind != GeneratorTag::Kind::simple)
      throw Error("folded generator in a word over simple reflections");
    out = out * simple_reflection(tag.index);
  }
  return out;
}

RootSet::RootSet(int dimension, std::vector<Entry> entries, int depth_reached, bool complete)
    : dimension_(dimension),
      entries_(std::move(entries)),
      depth_reached_(depth_reached),
      complete_(complete) {
  for (std::size_t i = 0; i < entries_.size(); ++i) index_.emplace(entries_[i].coords, i);
}

std::optional<std::size_t> RootSet::find(const Vector& coords) const {
  auto it = index_.find(coords);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> RootSet::sorted_order() const {
  std::vector<std::size_t> order(entries_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (entries_[a].depth != entries_[b].depth) return entries_[a].depth < entries_[b].depth;
    return lex_compare(entries_[a].coords, entries_[b].coords) < 0;
  });
  return order;
}

RootSet positive_orbit_search(int dimension, const std::vector<Vector>& starts,
                              const std::vector<Generator>& generators, const SearchLimits& limits) {
  std::vector<RootSet::Entry> entries;
  std::map<Vector, std::size_t, VectorLess> index;
  for (std::size_t k = 0; k < starts.size(); ++k) {
    if (index.count(starts[k])) continue;
    index.emplace(starts[k], entries.size());
    entries.push_back({starts[k], 0, {RootWitness{{}, static_cast<int>(k)}}});
  }

  std::size_t layer_begin = 0;
  int depth = 0;
  bool complete = false;
  for (;;) {
    const std::size_t layer_end = entries.size();
    if (layer_begin == layer_end) {
      complete = true;
      break;
    }
    const bool probe = depth == limits.max_depth;
    bool grew = false;
    for (std::size_t i = layer_begin; i < layer_end && !(probe && grew); ++i) {
      for (const Generator& gen : generators) {
        Vector image = gen.action.apply(entries[i].coords);
        const Sign s = uniform_sign(image);
        if (s == Sign::zero)
          throw InvariantViolation("image " + to_string(image) + " has mixed signs");
        if (s == Sign::negative) continue;
        auto it = index.find(image);
        if (it != index.end()) {
          auto& target = entries[it->second];
          if (it->second != i && target.witnesses.size() < 2) {
            Word w{gen.tag};
            const auto& parent = entries[i].witnesses.front();
            w.insert(w.end(), parent.word.begin(), parent.word.end());
            if (w != target.witnesses.front().word)
              target.witnesses.push_back({std::move(w), parent.start});
          }
          continue;
        }
        grew = true;
        if (probe) break;
        if (entries.size() >= limits.node_cap)
          throw CapExceeded("root search exceeds " + std::to_string(limits.node_cap) + " nodes");
        Word w{gen.tag};
        const RootWitness parent = entries[i].witnesses.front();
        w.insert(w.end(), parent.word.begin(), parent.word.end());
        index.emplace(image, entries.size());
        entries.push_back({std::move(image), depth + 1, {RootWitness{std::move(w), parent.start}}});
      }
    }
    if (probe) {
      complete = !grew;
      break;
    }
    layer_begin = layer_end;
    ++depth;
  }
  int reached = 0;
  for (const auto& e : entries) reached = std::max(reached, e.depth);
  return RootSet(dimension, std::move(entries), reached, complete);
}

RootSet enumerate_positive_roots(const CanonicalRepresentation& rep, int max_depth,
                                 std::size_t node_cap) {
  std::vector<Vector> starts;
  std::vector<Generator> gens;
  for (int s = 0; s < rep.dimension(); ++s) {
    starts.push_back(rep.simple_root(s));
    gens.push_back({GeneratorTag::simple(s), rep.simple_action(s)});
  }
  return positive_orbit_search(rep.dimension(), starts, gens, {max_depth, node_cap});
}

GroupElement reflection_of(const CanonicalRepresentation& rep, const RootSet& roots, std::size_t i,
                           std::size_t witness) {
  const RootWitness& wit = roots[i].witnesses.at(witness);
  const GroupElement w = rep.element(wit.word);
  return w * rep.simple_reflection(wit.start) * w.inverse();
}

Matrix reflection_matrix(const FormMatrix& form, const Vector& alpha) {
  const int n = form.size();
  const Vector b_alpha = mul(form.matrix(), alpha);
  Matrix m = Matrix::Identity(n, n);
  for (int i = 0; i < n; ++i) {
    if (alpha(i).is_zero()) continue;
    for (int j = 0; j < n; ++j)
      if (!b_alpha(j).is_zero()) m(i, j) -= alpha(i) * b_alpha(j);
  }
  return m;
}

RootSet restrict_to_subset(const RootSet& roots, const std::vector<int>& positions) {
  std::vector<bool> inside(static_cast<size_t>(roots.dimension()), false);
  for (int p : positions) inside[static_cast<size_t>(p)] = true;
  std::vector<RootSet::Entry> kept;
  for (const auto& e : roots.entries()) {
    bool ok = true;
    for (int p : support(e.coords)) ok = ok && inside[static_cast<size_t>(p)];
    if (ok) kept.push_back(e);
  }
  int reached = 0;
  for (const auto& e : kept) reached = std::max(reached, e.depth);
  return RootSet(roots.dimension(), std::move(kept), reached, roots.complete());
}

Root act(const GroupElement& w, const Root& root) {
  Root out{w.apply(root.coords), -1, Sign::zero};
  out.sign = uniform_sign(out.coords);
  if (out.sign == Sign::zero)
    throw InvariantViolation("act: image " + to_string(out.coords) + " is not a root");
  return out;
}

Vector permute(const std::vector<int>& images, const Vector& x) {
  Vector y(x.size());
  for (Eigen::Index s = 0; s < x.size(); ++s) y(images[static_cast<size_t>(s)]) = x(s);
  return y;
}

std::vector<int> support(const Vector& x) {
  std::vector<int> out;
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (!x(i).is_zero()) out.push_back(static_cast<int>(i));
  return out;
}

}  // namespace coxfold
