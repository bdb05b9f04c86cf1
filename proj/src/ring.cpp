#include "primesrc/ring.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace primesrc {

namespace {

std::string join_witness(const std::vector<Element>& w) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out << ',';
    out << w[i];
  }
  out << ')';
  return out.str();
}

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xffu;
    h *= 1099511628211ull;
  }
  return h;
}

void require_order(std::uint64_t n, const Limits& limits, std::string_view what) {
  if (n < 1) throw Error(std::string(what) + ": order must be at least 1");
  if (n > limits.max_order) throw CapExceeded(what, n, limits.max_order);
}

std::vector<std::string> residue_labels(std::uint64_t n, std::uint64_t step = 1) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) labels.push_back(std::to_string(i * step));
  return labels;
}

// Rings on a cyclic additive group of order n, product x*y*e mod n.
FiniteRing::Tables cyclic_tables(std::uint64_t n, std::uint64_t e) {
  FiniteRing::Tables t;
  t.order = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  for (std::uint64_t x = 0; x < n; ++x) {
    for (std::uint64_t y = 0; y < n; ++y) {
      t.add[x * n + y] = static_cast<Element>((x + y) % n);
      t.mul[x * n + y] = static_cast<Element>((x * y % n) * e % n);
    }
  }
  t.labels = residue_labels(n);
  return t;
}

}  // namespace

CapExceeded::CapExceeded(std::string_view what, std::uint64_t requested,
                         std::size_t cap)
    : Error(std::string(what) + ": ring of order " + std::to_string(requested) +
            " exceeds the element cap of " + std::to_string(cap)),
      requested_(requested),
      cap_(cap) {}

AxiomViolation::AxiomViolation(std::string axiom, std::vector<Element> witness)
    : Error("ring axiom violated: " + axiom + " at " + join_witness(witness)),
      axiom_(std::move(axiom)),
      witness_(std::move(witness)) {}

FiniteRing FiniteRing::from_tables_unchecked(Tables tables, std::string descriptor) {
  const std::size_t n = tables.order;
  if (n == 0) throw MalformedTable("ring order must be at least 1");
  if (tables.add.size() != n * n || tables.mul.size() != n * n) {
    throw MalformedTable("tables must be order x order");
  }
  if (tables.labels.empty()) tables.labels = residue_labels(n);
  if (tables.labels.size() != n) {
    throw MalformedTable("expected " + std::to_string(n) + " labels, got " +
                         std::to_string(tables.labels.size()));
  }
  for (std::size_t i = 0; i < n * n; ++i) {
    if (tables.add[i] >= n || tables.mul[i] >= n) {
      throw MalformedTable("table entry out of range at row " +
                           std::to_string(i / n) + ", column " +
                           std::to_string(i % n));
    }
  }
  {
    std::unordered_set<std::string_view> seen;
    for (const auto& l : tables.labels) {
      if (!seen.insert(l).second) throw MalformedTable("duplicate label '" + l + "'");
    }
  }

  FiniteRing r;
  r.data_ = std::make_shared<const Tables>(std::move(tables));
  r.descriptor_ = std::move(descriptor);

  // Inverse lookup; if the additive group is broken, neg stays at 0 and
  // check_axioms reports it.
  r.neg_.assign(n, 0);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (r.add(x, y) == 0) {
        r.neg_[x] = y;
        break;
      }
    }
  }

  std::uint64_t h = 1469598103934665603ull;
  h = fnv1a(h, n);
  for (Element v : r.data_->add) h = fnv1a(h, v);
  for (Element v : r.data_->mul) h = fnv1a(h, v);
  r.fingerprint_ = h;

  r.one_ = find_identity(r);
  return r;
}

std::optional<Element> FiniteRing::find_label(std::string_view label) const {
  const auto& labels = data_->labels;
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) return std::nullopt;
  return static_cast<Element>(it - labels.begin());
}

bool FiniteRing::same_tables(const FiniteRing& other) const noexcept {
  return data_ == other.data_ ||
         (order() == other.order() && data_->add == other.data_->add &&
          data_->mul == other.data_->mul);
}

void check_axioms(const FiniteRing::Tables& t) {
  const std::size_t n = t.order;
  if (n == 0 || t.add.size() != n * n || t.mul.size() != n * n) {
    throw MalformedTable("tables must be order x order with order >= 1");
  }
  auto add = [&](Element x, Element y) { return t.add[x * n + y]; };
  auto mul = [&](Element x, Element y) { return t.mul[x * n + y]; };
  for (std::size_t i = 0; i < n * n; ++i) {
    if (t.add[i] >= n || t.mul[i] >= n) throw MalformedTable("table entry out of range");
  }

  for (Element x = 0; x < n; ++x) {
    if (add(0, x) != x || add(x, 0) != x) {
      throw AxiomViolation("additive identity at index 0", {x});
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (add(x, y) != add(y, x)) throw AxiomViolation("addition commutative", {x, y});
    }
  }
  for (Element x = 0; x < n; ++x) {
    bool has_inverse = false;
    for (Element y = 0; y < n && !has_inverse; ++y) has_inverse = add(x, y) == 0;
    if (!has_inverse) throw AxiomViolation("additive inverse exists", {x});
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        if (add(add(x, y), z) != add(x, add(y, z))) {
          throw AxiomViolation("addition associative", {x, y, z});
        }
      }
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        if (mul(mul(x, y), z) != mul(x, mul(y, z))) {
          throw AxiomViolation("multiplication associative", {x, y, z});
        }
      }
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        if (mul(x, add(y, z)) != add(mul(x, y), mul(x, z))) {
          throw AxiomViolation("left distributivity", {x, y, z});
        }
        if (mul(add(x, y), z) != add(mul(x, z), mul(y, z))) {
          throw AxiomViolation("right distributivity", {x, y, z});
        }
      }
    }
  }
  for (Element x = 0; x < n; ++x) {
    if (mul(0, x) != 0 || mul(x, 0) != 0) throw AxiomViolation("zero annihilates", {x});
  }
}

FiniteRing make_zn(std::uint64_t n, const Limits& limits) {
  require_order(n, limits, "Z(n)");
  return FiniteRing::from_tables_unchecked(cyclic_tables(n, 1 % n),
                                           "Z(" + std::to_string(n) + ")");
}

FiniteRing make_zero_mult_ring(std::uint64_t n, const Limits& limits) {
  require_order(n, limits, "N(n)");
  return FiniteRing::from_tables_unchecked(cyclic_tables(n, 0),
                                           "N(" + std::to_string(n) + ")");
}

FiniteRing make_scaled_zn(std::uint64_t n, std::uint64_t e, const Limits& limits) {
  require_order(n, limits, "SZ(n,e)");
  if (e >= n) {
    throw Error("SZ(n,e): e must satisfy 0 <= e < n, got e=" + std::to_string(e) +
                " for n=" + std::to_string(n));
  }
  return FiniteRing::from_tables_unchecked(
      cyclic_tables(n, e), "SZ(" + std::to_string(n) + "," + std::to_string(e) + ")");
}

FiniteRing make_subring_kzn(std::uint64_t k, std::uint64_t n, const Limits& limits) {
  if (k < 1 || n < 1 || n % k != 0) {
    throw Error("kZ(n): k must be a positive divisor of n, got k=" + std::to_string(k) +
                ", n=" + std::to_string(n));
  }
  const std::uint64_t m = n / k;
  require_order(m, limits, "kZ(n)");
  FiniteRing::Tables t;
  t.order = m;
  t.add.resize(m * m);
  t.mul.resize(m * m);
  // Element i stands for the residue i*k mod n.
  for (std::uint64_t i = 0; i < m; ++i) {
    for (std::uint64_t j = 0; j < m; ++j) {
      t.add[i * m + j] = static_cast<Element>((i + j) % m);
      t.mul[i * m + j] = static_cast<Element>(((i * k % n) * (j * k % n) % n) / k);
    }
  }
  t.labels = residue_labels(m, k);
  return FiniteRing::from_tables_unchecked(
      std::move(t), std::to_string(k) + "Z(" + std::to_string(n) + ")");
}

FiniteRing make_matrix_ring(std::uint64_t d, const FiniteRing& base, const Limits& limits) {
  if (d < 1) throw Error("M(d,R): d must be at least 1");
  const std::uint64_t b = base.order();
  const std::uint64_t cells = d * d;
  // Saturating b^(d*d); anything past the cap is rejected anyway.
  std::uint64_t order = 1;
  for (std::uint64_t i = 0; i < cells && order <= limits.max_order; ++i) {
    order = order > UINT64_MAX / b ? UINT64_MAX : order * b;
  }
  require_order(order, limits, "M(d,R)");

  auto decode = [&](std::uint64_t idx) {
    std::vector<Element> entries(cells);
    for (std::uint64_t c = cells; c-- > 0;) {
      entries[c] = static_cast<Element>(idx % b);
      idx /= b;
    }
    return entries;
  };
  auto encode = [&](const std::vector<Element>& entries) {
    std::uint64_t idx = 0;
    for (Element v : entries) idx = idx * b + v;
    return static_cast<Element>(idx);
  };

  std::vector<std::vector<Element>> decoded(order);
  for (std::uint64_t i = 0; i < order; ++i) decoded[i] = decode(i);

  FiniteRing::Tables t;
  t.order = order;
  t.add.resize(order * order);
  t.mul.resize(order * order);
  std::vector<Element> sum(cells), prod(cells);
  for (std::uint64_t x = 0; x < order; ++x) {
    const auto& mx = decoded[x];
    for (std::uint64_t y = 0; y < order; ++y) {
      const auto& my = decoded[y];
      for (std::uint64_t c = 0; c < cells; ++c) sum[c] = base.add(mx[c], my[c]);
      for (std::uint64_t i = 0; i < d; ++i) {
        for (std::uint64_t j = 0; j < d; ++j) {
          Element acc = 0;
          for (std::uint64_t k = 0; k < d; ++k) {
            acc = base.add(acc, base.mul(mx[i * d + k], my[k * d + j]));
          }
          prod[i * d + j] = acc;
        }
      }
      t.add[x * order + y] = encode(sum);
      t.mul[x * order + y] = encode(prod);
    }
  }

  t.labels.reserve(order);
  for (std::uint64_t x = 0; x < order; ++x) {
    std::string l = "[";
    for (std::uint64_t i = 0; i < d; ++i) {
      if (i) l += ',';
      l += '[';
      for (std::uint64_t j = 0; j < d; ++j) {
        if (j) l += ',';
        l += base.label(decoded[x][i * d + j]);
      }
      l += ']';
    }
    l += ']';
    t.labels.push_back(std::move(l));
  }
  return FiniteRing::from_tables_unchecked(
      std::move(t), "M(" + std::to_string(d) + "," + base.descriptor() + ")");
}

FiniteRing make_product(const FiniteRing& r, const FiniteRing& s, const Limits& limits) {
  const std::uint64_t rn = r.order(), sn = s.order();
  require_order(rn * sn, limits, "product");
  const std::uint64_t n = rn * sn;
  FiniteRing::Tables t;
  t.order = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  for (std::uint64_t x = 0; x < n; ++x) {
    const auto x1 = static_cast<Element>(x / sn), x2 = static_cast<Element>(x % sn);
    for (std::uint64_t y = 0; y < n; ++y) {
      const auto y1 = static_cast<Element>(y / sn), y2 = static_cast<Element>(y % sn);
      t.add[x * n + y] = static_cast<Element>(r.add(x1, y1) * sn + s.add(x2, y2));
      t.mul[x * n + y] = static_cast<Element>(r.mul(x1, y1) * sn + s.mul(x2, y2));
    }
  }
  t.labels.reserve(n);
  for (std::uint64_t x = 0; x < n; ++x) {
    t.labels.push_back("(" + r.label(static_cast<Element>(x / sn)) + "," +
                       s.label(static_cast<Element>(x % sn)) + ")");
  }
  auto wrap = [](const std::string& d) {
    return d.find(" x ") == std::string::npos ? d : "(" + d + ")";
  };
  return FiniteRing::from_tables_unchecked(std::move(t),
                                           r.descriptor() + " x " + wrap(s.descriptor()));
}

FiniteRing make_custom(std::size_t order, std::vector<std::vector<Element>> add,
                       std::vector<std::vector<Element>> mul,
                       std::vector<std::string> labels, std::optional<Element> one,
                       const Limits& limits) {
  require_order(order, limits, "custom ring");
  auto flatten = [order](std::vector<std::vector<Element>>& rows, const char* name) {
    if (rows.size() != order) {
      throw MalformedTable(std::string(name) + " table has " + std::to_string(rows.size()) +
                           " rows, expected " + std::to_string(order));
    }
    std::vector<Element> flat;
    flat.reserve(order * order);
    for (std::size_t i = 0; i < order; ++i) {
      if (rows[i].size() != order) {
        throw MalformedTable(std::string(name) + " table row " + std::to_string(i) +
                             " has " + std::to_string(rows[i].size()) + " entries, expected " +
                             std::to_string(order));
      }
      flat.insert(flat.end(), rows[i].begin(), rows[i].end());
    }
    return flat;
  };
  FiniteRing::Tables t;
  t.order = order;
  t.add = flatten(add, "add");
  t.mul = flatten(mul, "mul");
  t.labels = std::move(labels);
  auto r = FiniteRing::from_tables_unchecked(std::move(t), "custom");
  check_axioms(r);
  if (one) {
    if (*one >= order) throw MalformedTable("identity index out of range");
    for (Element x = 0; x < order; ++x) {
      if (r.mul(*one, x) != x || r.mul(x, *one) != x) {
        throw AxiomViolation("declared identity acts as identity", {*one, x});
      }
    }
  }
  return r;
}

std::optional<Element> find_identity(const FiniteRing& r) {
  const std::size_t n = r.order();
  for (Element u = 0; u < n; ++u) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) ok = r.mul(u, x) == x && r.mul(x, u) == x;
    if (ok) return u;
  }
  return std::nullopt;
}

bool is_commutative(const FiniteRing& r) {
  const std::size_t n = r.order();
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      if (r.mul(x, y) != r.mul(y, x)) return false;
    }
  }
  return true;
}

}  // namespace primesrc
