#pragma once

#include <starring/element_set.hpp>
#include <starring/error.hpp>

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdlib>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace starring {

enum class RingKind { zmod, product, matrix };

/// Involution attached to a construction node.
enum class Involution { identity, transpose, componentwise };

inline const char* to_string(Involution inv) {
  switch (inv) {
    case Involution::identity: return "id";
    case Involution::transpose: return "transpose";
    case Involution::componentwise: return "componentwise";
  }
  return "?";
}

/// Upper bound on the order of any ring the constructors will build.
struct RingLimits {
  std::size_t max_order = 2048;

  /// Default limits, overridden by STARRING_MAX_ORDER when it holds a positive integer.
  static RingLimits from_environment() {
    RingLimits limits;
    if (const char* env = std::getenv("STARRING_MAX_ORDER")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) limits.max_order = static_cast<std::size_t>(v);
    }
    return limits;
  }
};

namespace detail {

// Tables are materialized only up to this order; larger rings compute structurally.
inline constexpr std::size_t kTableOrderLimit = 256;
// base^(k*k) <= 2048 with base >= 2 forces k*k <= 11.
inline constexpr std::size_t kMaxMatrixEntries = 16;

struct RingNode {
  RingKind kind = RingKind::zmod;
  Involution involution = Involution::identity;
  std::size_t order = 0;
  ElementId one = 0;
  unsigned modulus = 0;
  unsigned matrix_size = 0;
  std::shared_ptr<const RingNode> left, right, base;
  std::vector<ElementId> neg_table, star_table;
  std::vector<std::uint16_t> add_table, mul_table;
  std::string descriptor;
  bool involution_proper = false;
  std::optional<std::pair<ElementId, ElementId>> anti_multiplicative_defect;

  ElementId add(ElementId a, ElementId b) const {
    if (!add_table.empty()) return add_table[a * order + b];
    switch (kind) {
      case RingKind::zmod: return static_cast<ElementId>((a + b) % modulus);
      case RingKind::product: {
        const auto w = right->order;
        return static_cast<ElementId>(left->add(a / w, b / w) * w + right->add(a % w, b % w));
      }
      case RingKind::matrix: {
        std::array<ElementId, kMaxMatrixEntries> x{}, y{};
        decode(a, x);
        decode(b, y);
        const std::size_t n = entry_count();
        for (std::size_t i = 0; i < n; ++i) x[i] = base->add(x[i], y[i]);
        return encode(x);
      }
    }
    return 0;
  }

  ElementId mul(ElementId a, ElementId b) const {
    if (!mul_table.empty()) return mul_table[a * order + b];
    switch (kind) {
      case RingKind::zmod:
        return static_cast<ElementId>((static_cast<std::uint64_t>(a) * b) % modulus);
      case RingKind::product: {
        const auto w = right->order;
        return static_cast<ElementId>(left->mul(a / w, b / w) * w + right->mul(a % w, b % w));
      }
      case RingKind::matrix: {
        std::array<ElementId, kMaxMatrixEntries> x{}, y{}, z{};
        decode(a, x);
        decode(b, y);
        const unsigned k = matrix_size;
        for (unsigned i = 0; i < k; ++i)
          for (unsigned j = 0; j < k; ++j) {
            ElementId acc = 0;
            for (unsigned t = 0; t < k; ++t) acc = base->add(acc, base->mul(x[i * k + t], y[t * k + j]));
            z[i * k + j] = acc;
          }
        return encode(z);
      }
    }
    return 0;
  }

  std::size_t entry_count() const { return std::size_t{matrix_size} * matrix_size; }

  void decode(ElementId id, std::array<ElementId, kMaxMatrixEntries>& entries) const {
    const std::size_t n = entry_count();
    const auto q = static_cast<ElementId>(base->order);
    for (std::size_t i = n; i-- > 0;) {
      entries[i] = id % q;
      id /= q;
    }
  }

  ElementId encode(const std::array<ElementId, kMaxMatrixEntries>& entries) const {
    const std::size_t n = entry_count();
    const auto q = static_cast<ElementId>(base->order);
    ElementId id = 0;
    for (std::size_t i = 0; i < n; ++i) id = id * q + entries[i];
    return id;
  }

  std::string label(ElementId a) const {
    switch (kind) {
      case RingKind::zmod: return std::to_string(a);
      case RingKind::product: {
        const auto w = static_cast<ElementId>(right->order);
        return "(" + left->tuple_parts(a / w) + "," + right->tuple_parts(a % w) + ")";
      }
      case RingKind::matrix: {
        std::array<ElementId, kMaxMatrixEntries> x{};
        decode(a, x);
        std::string out = "[";
        for (unsigned i = 0; i < matrix_size; ++i) {
          out += i ? ",[" : "[";
          for (unsigned j = 0; j < matrix_size; ++j) {
            if (j) out += ",";
            out += base->label(x[i * matrix_size + j]);
          }
          out += "]";
        }
        return out + "]";
      }
    }
    return {};
  }

  // Direct products render as flat tuples, so nested components drop their parentheses.
  std::string tuple_parts(ElementId a) const {
    std::string s = label(a);
    if (kind == RingKind::product) return s.substr(1, s.size() - 2);
    return s;
  }
};

}  // namespace detail

/// A finite unital ring with involution. Elements are dense ids in [0, order) with id 0 the zero.
/// Instances are immutable and cheap to copy; copies share the underlying tables.
class FiniteStarRing {
 public:
  explicit FiniteStarRing(std::shared_ptr<const detail::RingNode> node) : node_(std::move(node)) {}

  std::size_t order() const noexcept { return node_->order; }
  ElementId zero() const noexcept { return 0; }
  ElementId one() const noexcept { return node_->one; }

  ElementId add(ElementId a, ElementId b) const { return node_->add(a, b); }
  ElementId mul(ElementId a, ElementId b) const { return node_->mul(a, b); }
  ElementId neg(ElementId a) const { return node_->neg_table[a]; }
  ElementId sub(ElementId a, ElementId b) const { return add(a, neg(b)); }
  ElementId star(ElementId a) const { return node_->star_table[a]; }

  std::string label(ElementId a) const { return node_->label(a); }

  /// Looks an element up by its rendered label; whitespace is ignored.
  std::optional<ElementId> find(std::string_view text) const {
    std::string wanted;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) wanted.push_back(c);
    for (ElementId a = 0; a < order(); ++a)
      if (label(a) == wanted) return a;
    return std::nullopt;
  }

  /// Like find(), but throws InvalidArgument for labels that name no element.
  ElementId element(std::string_view text) const {
    if (auto a = find(text)) return *a;
    throw InvalidArgument("no element labelled '" + std::string(text) + "' in " + descriptor());
  }

  bool involution_proper() const noexcept { return node_->involution_proper; }
  /// A pair (x, y) with (xy)* != y*x*, recorded when the involution is not proper.
  std::optional<std::pair<ElementId, ElementId>> anti_multiplicative_defect() const {
    return node_->anti_multiplicative_defect;
  }

  RingKind kind() const noexcept { return node_->kind; }
  Involution involution() const noexcept { return node_->involution; }
  const std::string& descriptor() const noexcept { return node_->descriptor; }
  unsigned modulus() const noexcept { return node_->modulus; }
  unsigned matrix_size() const noexcept { return node_->matrix_size; }

  FiniteStarRing left_factor() const { return FiniteStarRing(require(node_->left, "left factor")); }
  FiniteStarRing right_factor() const { return FiniteStarRing(require(node_->right, "right factor")); }
  FiniteStarRing matrix_base() const { return FiniteStarRing(require(node_->base, "matrix base")); }

  /// Id of the pair (l, r) in a direct product.
  ElementId pair(ElementId l, ElementId r) const {
    return static_cast<ElementId>(l * node_->right->order + r);
  }
  std::pair<ElementId, ElementId> components(ElementId a) const {
    const auto w = static_cast<ElementId>(node_->right->order);
    return {a / w, a % w};
  }

  /// Id of the matrix with the given row-major entries (base ids).
  ElementId matrix(std::span<const ElementId> entries) const {
    if (kind() != RingKind::matrix || entries.size() != node_->entry_count())
      throw InvalidArgument("matrix(): entry count does not match the ring");
    std::array<ElementId, detail::kMaxMatrixEntries> x{};
    std::copy(entries.begin(), entries.end(), x.begin());
    return node_->encode(x);
  }
  std::vector<ElementId> entries(ElementId a) const {
    std::array<ElementId, detail::kMaxMatrixEntries> x{};
    node_->decode(a, x);
    return {x.begin(), x.begin() + static_cast<std::ptrdiff_t>(node_->entry_count())};
  }

  /// Additive order of the identity.
  std::size_t characteristic() const {
    std::size_t c = 1;
    for (ElementId x = one(); x != zero(); x = add(x, one())) ++c;
    return c;
  }

  bool is_commutative() const {
    for (ElementId a = 0; a < order(); ++a)
      for (ElementId b = a + 1; b < order(); ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  friend bool operator==(const FiniteStarRing& a, const FiniteStarRing& b) { return a.node_ == b.node_; }

  /// Shared construction node; used by the constructors to compose rings.
  const std::shared_ptr<const detail::RingNode>& node() const noexcept { return node_; }

 private:
  static std::shared_ptr<const detail::RingNode> require(const std::shared_ptr<const detail::RingNode>& p,
                                                         const char* what) {
    if (!p) throw InvalidArgument(std::string("ring has no ") + what);
    return p;
  }

  std::shared_ptr<const detail::RingNode> node_;
};

namespace detail {

inline void check_order(std::size_t order, const RingLimits& limits) {
  if (order > limits.max_order) throw OrderLimitError(order, limits.max_order);
}

inline void materialize_tables(RingNode& node) {
  const std::size_t n = node.order;
  if (n > kTableOrderLimit) return;
  std::vector<std::uint16_t> add(n * n), mul(n * n);
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<std::uint16_t>(node.add(a, b));
      mul[a * n + b] = static_cast<std::uint16_t>(node.mul(a, b));
    }
  node.add_table = std::move(add);
  node.mul_table = std::move(mul);
}

// Exhaustive check of (xy)* = y*x*; records the first failing pair.
inline void record_anti_multiplicativity(RingNode& node) {
  node.involution_proper = true;
  for (ElementId x = 0; x < node.order; ++x)
    for (ElementId y = 0; y < node.order; ++y)
      if (node.star_table[node.mul(x, y)] != node.mul(node.star_table[y], node.star_table[x])) {
        node.involution_proper = false;
        node.anti_multiplicative_defect = std::pair{x, y};
        return;
      }
}

inline std::string product_descriptor_part(const RingNode& n) {
  if (n.kind == RingKind::product) return "(" + n.descriptor + ")";
  return n.descriptor;
}

}  // namespace detail

/// Z_n with the identity involution.
inline FiniteStarRing make_zmod(unsigned n, const RingLimits& limits = RingLimits::from_environment()) {
  if (n < 2) throw InvalidArgument("Z_n requires n >= 2");
  detail::check_order(n, limits);
  auto node = std::make_shared<detail::RingNode>();
  node->kind = RingKind::zmod;
  node->involution = Involution::identity;
  node->order = n;
  node->modulus = n;
  node->one = 1;
  node->descriptor = "Z" + std::to_string(n);
  detail::materialize_tables(*node);
  node->neg_table.resize(n);
  node->star_table.resize(n);
  for (ElementId a = 0; a < n; ++a) {
    node->neg_table[a] = (n - a) % n;
    node->star_table[a] = a;
  }
  node->involution_proper = true;
  return FiniteStarRing(std::move(node));
}

/// Direct product with componentwise operations and componentwise involution.
inline FiniteStarRing make_product(const FiniteStarRing& left, const FiniteStarRing& right,
                                   const RingLimits& limits = RingLimits::from_environment()) {
  const std::size_t order = left.order() * right.order();
  detail::check_order(order, limits);
  auto node = std::make_shared<detail::RingNode>();
  node->kind = RingKind::product;
  node->involution = Involution::componentwise;
  node->order = order;
  node->left = left.node();
  node->right = right.node();
  node->one = static_cast<ElementId>(left.one() * right.order() + right.one());
  node->descriptor = detail::product_descriptor_part(*node->left) + " x " + right.descriptor();
  detail::materialize_tables(*node);
  node->neg_table.resize(order);
  node->star_table.resize(order);
  const auto w = static_cast<ElementId>(right.order());
  for (ElementId a = 0; a < order; ++a) {
    node->neg_table[a] = left.neg(a / w) * w + right.neg(a % w);
    node->star_table[a] = left.star(a / w) * w + right.star(a % w);
  }
  node->involution_proper = left.involution_proper() && right.involution_proper();
  if (!node->involution_proper) {
    // Lift the factor's defect; a componentwise failure is a failure of the product.
    if (auto d = left.anti_multiplicative_defect())
      node->anti_multiplicative_defect = std::pair{d->first * w, d->second * w};
    else if (auto e = right.anti_multiplicative_defect())
      node->anti_multiplicative_defect = e;
  }
  return FiniteStarRing(std::move(node));
}

/// Full k x k matrix ring over a commutative base. The transpose tag applies the base involution
/// entrywise after transposing; the identity tag is a pseudo-involution once k >= 2, flagged via
/// involution_proper() == false.
inline FiniteStarRing make_matrix_ring(const FiniteStarRing& base, unsigned k, Involution involution,
                                       const RingLimits& limits = RingLimits::from_environment()) {
  if (k < 1) throw InvalidArgument("matrix size must be >= 1");
  if (involution != Involution::transpose && involution != Involution::identity)
    throw InvalidArgument("matrix rings take the transpose or identity involution");
  if (!base.is_commutative()) throw NoncommutativeBaseError("matrix base ring " + base.descriptor() + " is not commutative");
  std::size_t order = 1;
  for (unsigned i = 0; i < k * k; ++i) {
    order *= base.order();
    detail::check_order(order, limits);
  }
  if (k * k > detail::kMaxMatrixEntries) throw OrderLimitError(order, limits.max_order);

  auto node = std::make_shared<detail::RingNode>();
  node->kind = RingKind::matrix;
  node->involution = involution;
  node->order = order;
  node->matrix_size = k;
  node->base = base.node();
  node->descriptor = "M" + std::to_string(k) + "(" + base.descriptor() + ")@" + to_string(involution);

  std::array<ElementId, detail::kMaxMatrixEntries> idm{};
  for (unsigned i = 0; i < k; ++i) idm[i * k + i] = base.one();
  node->one = node->encode(idm);

  detail::materialize_tables(*node);
  node->neg_table.resize(order);
  node->star_table.resize(order);
  std::array<ElementId, detail::kMaxMatrixEntries> x{}, y{};
  for (ElementId a = 0; a < order; ++a) {
    node->decode(a, x);
    for (std::size_t i = 0; i < node->entry_count(); ++i) y[i] = base.neg(x[i]);
    node->neg_table[a] = node->encode(y);
    if (involution == Involution::identity) {
      node->star_table[a] = a;
    } else {
      for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j) y[i * k + j] = base.star(x[j * k + i]);
      node->star_table[a] = node->encode(y);
    }
  }
  detail::record_anti_multiplicativity(*node);
  return FiniteStarRing(std::move(node));
}

}  // namespace starring
