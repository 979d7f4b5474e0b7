#include "cox/torsionfree.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <memory>
#include <set>

#include <json.hpp>

#include "cox/errors.hpp"
#include "cox/involutions.hpp"

namespace cox {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// The symbol

DaggerSymbol build_dagger(const WeylData& psi, const std::vector<int>& nodes) {
  if (nodes.empty()) throw InputError("a dagger symbol needs at least one attachment");
  std::vector<Attachment> plain, special;
  std::set<int> seen;
  for (int s : nodes) {
    if (s < 0 || s >= psi.rank) throw InputError("attachment node out of range for " + psi.name());
    if (!seen.insert(s).second) throw InputError("attachment node " + std::to_string(s + 1) + " repeated");
    if (!is_admissible(psi, s))
      throw InputError("node " + std::to_string(s + 1) + " of " + psi.name() + " is not admissible");
    WeightVector u = weight_vector(psi, s);
    F2Vector ubar = u.reduced();
    if (is_specially_admissible(psi, s)) special.push_back({s, AttachmentKind::Special, u, ubar});
    else plain.push_back({s, AttachmentKind::Plain, u, ubar});
  }
  DaggerSymbol d;
  d.psi_ = psi;
  d.ell_ = static_cast<int>(plain.size());
  d.attachments_ = plain;
  d.attachments_.insert(d.attachments_.end(), special.begin(), special.end());
  d.gamma_ = psi.symbol();
  for (std::size_t i = 0; i < d.attachments_.size(); ++i) {
    int t = d.gamma_.add_node("t" + std::to_string(i + 1));
    d.gamma_.set_edge(d.attachments_[i].node, t, 4);
  }
  return d;
}

// ---------------------------------------------------------------------------
// The image group

SemidirectElement SemidirectElement::identity(int ell, int blocks, int n) {
  return SemidirectElement{F2Vector(ell), std::vector<F2Vector>(blocks, F2Vector(n)),
                           WeylElement::identity(n)};
}

SemidirectElement SemidirectElement::operator*(const SemidirectElement& o) const {
  SemidirectElement r;
  r.x = x + o.x;
  F2Matrix gbar = reduce_mod2(g);
  r.v.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r.v.push_back(v[i] + gbar * o.v[i]);
  r.g = g * o.g;
  return r;
}

bool SemidirectElement::is_identity() const {
  return x.is_zero() && std::all_of(v.begin(), v.end(), [](F2Vector b) { return b.is_zero(); }) &&
         g.is_identity();
}

SemidirectElement SemidirectElement::pow(long k) const {
  SemidirectElement result = identity(x.dim(), static_cast<int>(v.size()), g.dim());
  SemidirectElement base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

SemidirectElement phi_generator(const DaggerSymbol& d, int node, PhiMode mode) {
  const int ell = mode == PhiMode::Hat ? d.ell() : 0;
  if (node < 0 || node >= d.gamma().size()) throw InputError("generator out of range");
  SemidirectElement e = SemidirectElement::identity(ell, d.m(), d.n());
  if (!d.is_pendant(node)) {
    e.g = reflection_matrix(d.psi(), node);
    return e;
  }
  const int i = node - d.n();
  e.v[i] = d.attachments()[i].reduced;
  if (i < ell) e.x = F2Vector::unit(ell, i);
  return e;
}

SemidirectElement phi(const DaggerSymbol& d, std::span<const int> word, PhiMode mode) {
  if (word.size() > kMaxWordLength) throw InputError("word longer than 10000 letters");
  SemidirectElement r = SemidirectElement::identity(mode == PhiMode::Hat ? d.ell() : 0, d.m(), d.n());
  for (int s : word) r = r * phi_generator(d, s, mode);
  return r;
}

SemidirectElement naive_phi(const DaggerSymbol& d, std::span<const int> word) {
  if (word.size() > kMaxWordLength) throw InputError("word longer than 10000 letters");
  SemidirectElement r = SemidirectElement::identity(0, 1, d.n());
  for (int s : word) {
    if (s < 0 || s >= d.gamma().size()) throw InputError("generator out of range");
    SemidirectElement e = SemidirectElement::identity(0, 1, d.n());
    if (d.is_pendant(s)) e.v[0] = d.attachments()[s - d.n()].reduced;
    else e.g = reflection_matrix(d.psi(), s);
    r = r * e;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Certificates

namespace {

using DaggerPtr = std::shared_ptr<const DaggerSymbol>;

Json names_of(const DaggerSymbol& d, std::span<const int> nodes) {
  Json out = Json::array();
  for (int v : nodes) out.push_back(d.gamma().name(v));
  return out;
}

Json element_json(const SemidirectElement& e) {
  Json v = Json::array();
  for (F2Vector b : e.v) v.push_back(b.to_string());
  Json g = Json::array();
  for (int i = 0; i < e.g.dim(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < e.g.dim(); ++j) row.push_back(e.g.matrix()(i, j));
    g.push_back(row);
  }
  return Json{{"x", e.x.to_string()}, {"v", v}, {"g", g}};
}

void add_step(Certificate& c, std::string name, std::string basis, const Json& objects,
              std::function<bool()> check) {
  bool ok = check();
  c.steps.push_back({std::move(name), std::move(basis), objects.dump(), ok, std::move(check)});
}

void add_cited(Certificate& c, std::string name, const std::string& fact) {
  add_step(c, std::move(name), "cited: " + fact, Json::object(), [] { return true; });
}

const char* mode_name(PhiMode mode) { return mode == PhiMode::Hat ? "hat" : "plain"; }

int minus_one_dim(const WeylElement& g) {
  return rank_over_rationals(g.matrix() - IntMatrix::identity(g.dim()));
}

void append_relation_steps(Certificate& c, const DaggerPtr& d, PhiMode mode) {
  const CoxeterSymbol& gamma = d->gamma();
  for (int a = 0; a < gamma.size(); ++a) {
    std::vector<int> word{a, a};
    add_step(c, "relation (" + gamma.name(a) + ")^2", "machine-checked",
             Json{{"word", names_of(*d, word)}, {"power", 1}, {"mode", mode_name(mode)}},
             [d, mode, word] { return phi(*d, word, mode).is_identity(); });
  }
  for (int a = 0; a < gamma.size(); ++a)
    for (int b = a + 1; b < gamma.size(); ++b) {
      const int m = gamma.label(a, b);
      if (m == kInfinity) continue;
      std::vector<int> word{a, b};
      add_step(c, "relation (" + gamma.name(a) + " " + gamma.name(b) + ")^" + std::to_string(m),
               "machine-checked",
               Json{{"word", names_of(*d, word)}, {"power", m}, {"mode", mode_name(mode)}},
               [d, mode, word, m] { return phi(*d, word, mode).pow(m).is_identity(); });
    }
}

std::string class_label(const DaggerSymbol& d, NodeSet theta) {
  std::string s = "{";
  for (int v : theta.members()) s += (s.size() > 1 ? "," : "") + d.gamma().name(v);
  return s + "}";
}

}  // namespace

bool Certificate::ok() const {
  return std::all_of(steps.begin(), steps.end(), [](const auto& s) { return s.ok; });
}

bool Certificate::replay() const {
  return std::all_of(steps.begin(), steps.end(), [](const auto& s) { return s.check(); });
}

std::string certificate_json(const Certificate& c) {
  Json doc;
  doc["kind"] = c.kind;
  doc["ok"] = c.ok();
  Json steps = Json::array();
  for (const auto& s : c.steps)
    steps.push_back(Json{{"name", s.name}, {"basis", s.basis}, {"ok", s.ok}, {"objects", Json::parse(s.objects)}});
  doc["steps"] = steps;
  if (c.index <= BigInt(std::numeric_limits<std::int64_t>::max()))
    doc["index"] = static_cast<std::int64_t>(c.index);
  else
    doc["index"] = c.index.str();
  doc["p"] = c.p;
  return doc.dump();
}

Certificate verify_relations(const DaggerSymbol& d, PhiMode mode) {
  auto dp = std::make_shared<const DaggerSymbol>(d);
  Certificate c{"homomorphism-check", {}, kernel_index_formula(d, mode), 0};
  append_relation_steps(c, dp, mode);
  return c;
}

// ---------------------------------------------------------------------------
// Index and closure

BigInt kernel_index_formula(const DaggerSymbol& d, PhiMode mode) {
  int exponent = d.m() * d.n() + (mode == PhiMode::Hat ? d.ell() : 0);
  return (BigInt(1) << exponent) * BigInt(d.psi().order);
}

namespace {

// Open-addressing set of 64-bit keys; all-ones marks an empty slot.
class KeySet {
 public:
  explicit KeySet(std::uint64_t expected)
      : shift_(64 - std::bit_width(std::bit_ceil(2 * expected + 2) - 1)),
        slots_(std::bit_ceil(2 * expected + 2), kEmpty) {}

  bool insert(std::uint64_t key) {
    const std::size_t mask = slots_.size() - 1;
    std::size_t h = static_cast<std::size_t>((key * 0x9E3779B97F4A7C15ULL) >> shift_);
    while (true) {
      if (slots_[h] == key) return false;
      if (slots_[h] == kEmpty) {
        slots_[h] = key;
        return true;
      }
      h = (h + 1) & mask;
    }
  }

 private:
  static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};
  int shift_;
  std::vector<std::uint64_t> slots_;
};

}  // namespace

std::optional<std::uint64_t> image_order_by_closure(const DaggerSymbol& d, PhiMode mode,
                                                    std::uint64_t limit, std::string* why_not) {
  const WeylData& psi = d.psi();
  const int n = d.n(), m = d.m(), ell = mode == PhiMode::Hat ? d.ell() : 0;

  // The Weyl part is tracked through its action on a regular dominant vector.
  std::vector<std::int64_t> rho(n, 0);
  for (int s = 0; s < n; ++s) {
    auto u = weight_vector(psi, s);
    for (int i = 0; i < n; ++i) rho[i] += u.coords[i];
  }
  std::int64_t bias = 0;
  for (auto c : rho) bias = std::max(bias, c < 0 ? -c : c);
  const int coord_bits = std::bit_width(static_cast<std::uint64_t>(2 * bias));
  const int total_bits = ell + m * n + n * coord_bits;
  BigInt formula = kernel_index_formula(d, mode);
  if (total_bits > 63) {
    if (why_not) *why_not = "state needs " + std::to_string(total_bits) + " bits";
    return std::nullopt;
  }
  if (formula > limit) {
    if (why_not) *why_not = "image order " + formula.str() + " exceeds limit " + std::to_string(limit);
    return std::nullopt;
  }
  const auto expected = static_cast<std::uint64_t>(formula);
  const int v_offset = ell, c_offset = ell + m * n;
  const std::uint64_t n_mask = (std::uint64_t{1} << n) - 1, c_mask = (std::uint64_t{1} << coord_bits) - 1;

  auto encode = [&](std::uint64_t x, const std::vector<std::uint64_t>& v, const std::vector<std::int64_t>& c) {
    std::uint64_t key = x;
    for (int b = 0; b < m; ++b) key |= v[b] << (v_offset + b * n);
    for (int i = 0; i < n; ++i) {
      std::int64_t shifted = c[i] + bias;
      if (shifted < 0 || shifted > 2 * bias) throw CheckFailure("orbit coordinate escaped its bound");
      key |= static_cast<std::uint64_t>(shifted) << (c_offset + i * coord_bits);
    }
    return key;
  };

  std::vector<F2Matrix> refl2 = generators_mod2(psi);
  std::vector<std::uint64_t> queue;
  queue.reserve(expected + 1);
  KeySet seen(expected);
  {
    std::uint64_t start = encode(0, std::vector<std::uint64_t>(m, 0), rho);
    seen.insert(start);
    queue.push_back(start);
  }
  std::vector<std::uint64_t> v(m), v2(m);
  std::vector<std::int64_t> c(n), c2(n);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint64_t key = queue[head];
    const std::uint64_t x = ell == 0 ? 0 : key & ((std::uint64_t{1} << ell) - 1);
    for (int b = 0; b < m; ++b) v[b] = (key >> (v_offset + b * n)) & n_mask;
    for (int i = 0; i < n; ++i)
      c[i] = static_cast<std::int64_t>((key >> (c_offset + i * coord_bits)) & c_mask) - bias;

    for (int gen = 0; gen < n + m; ++gen) {
      std::uint64_t x2 = x;
      v2 = v;
      c2 = c;
      if (gen < n) {
        for (int b = 0; b < m; ++b)
          v2[b] = (refl2[gen] * F2Vector(n, static_cast<std::uint32_t>(v[b]))).bits();
        std::int64_t delta = 0;
        for (int j = 0; j < n; ++j) delta += psi.cartan(gen, j) * c[j];
        c2[gen] -= delta;
      } else {
        const int i = gen - n;
        v2[i] ^= d.attachments()[i].reduced.bits();
        if (i < ell) x2 ^= std::uint64_t{1} << i;
      }
      std::uint64_t next = encode(x2, v2, c2);
      if (seen.insert(next)) {
        queue.push_back(next);
        if (queue.size() > expected) return queue.size();  // already wrong; stop early
      }
    }
  }
  return queue.size();
}

KernelIndex kernel_index(const DaggerSymbol& d, PhiMode mode, bool enumerate) {
  KernelIndex out{kernel_index_formula(d, mode), true, {ClosureCheck::Status::Skipped, 0, "not requested"}};
  if (mode == PhiMode::Plain && d.ell() > 0) out.torsion_free = false;
  if (!enumerate) return out;
  std::string why;
  auto order = image_order_by_closure(d, mode, kClosureLimit, &why);
  if (!order) {
    out.closure = {ClosureCheck::Status::Skipped, 0, "skipped (size): " + why};
  } else if (BigInt(*order) == out.index) {
    out.closure = {ClosureCheck::Status::Verified, *order, "closure order equals the formula"};
  } else {
    out.closure = {ClosureCheck::Status::Mismatch, *order, "closure order differs from the formula"};
  }
  return out;
}

// ---------------------------------------------------------------------------
// Visible type-B subgroups and residual torsion

NodeSet BVisible::nodes(const DaggerSymbol& d) const {
  return NodeSet::of(path).with(d.pendant(attachment));
}

std::vector<BVisible> b_visibles(const DaggerSymbol& d) {
  std::vector<BVisible> out;
  const WeylData& psi = d.psi();
  for (int i = 0; i < d.m(); ++i) {
    out.push_back({i, {}});
    std::vector<std::vector<int>> stack{{d.attachments()[i].node}};
    while (!stack.empty()) {
      std::vector<int> path = std::move(stack.back());
      stack.pop_back();
      out.push_back({i, path});
      for (int u = psi.rank - 1; u >= 0; --u)
        if (psi.label(path.back(), u) == 3 && std::find(path.begin(), path.end(), u) == path.end()) {
          auto longer = path;
          longer.push_back(u);
          stack.push_back(std::move(longer));
        }
    }
  }
  return out;
}

bool faithful_on_Bk(const DaggerSymbol& d, const BVisible& b) {
  std::vector<F2Matrix> gens;
  for (int s : b.path) gens.push_back(reduce_mod2(reflection_matrix(d.psi(), s)));
  return orbit_span(gens, d.attachments()[b.attachment].reduced).span.dim() == b.k();
}

bool faithful_on_Bk(const DaggerSymbol& d, int attachment, int k) {
  if (attachment < 0 || attachment >= d.m()) throw InputError("attachment index out of range");
  bool found = false, all = true;
  for (const auto& b : b_visibles(d))
    if (b.attachment == attachment && b.k() == k) {
      found = true;
      all = all && faithful_on_Bk(d, b);
    }
  if (!found) throw InputError("no visible B_" + std::to_string(k) + " through that pendant");
  return all;
}

std::vector<TorsionWitness> torsion_witnesses(const DaggerSymbol& d) {
  std::vector<TorsionWitness> out;
  std::set<std::uint32_t> seen;
  for (const auto& b : b_visibles(d)) {
    if (d.attachments()[b.attachment].kind != AttachmentKind::Plain) continue;
    const int big_k = b.k();
    // Delta_1 is the initial B_k of this visible; the (-1)-type pieces of Psi
    // left over are single nodes of the path beyond it, pairwise apart.
    for (int k = 1; k <= big_k; k += 2) {
      BVisible first{b.attachment, std::vector<int>(b.path.begin(), b.path.begin() + (k - 1))};
      if (faithful_on_Bk(d, first)) continue;
      std::vector<int> rest(b.path.begin() + std::min<int>(k, static_cast<int>(b.path.size())), b.path.end());
      const std::uint32_t choices = std::uint32_t{1} << rest.size();
      for (std::uint32_t pick = 0; pick < choices; ++pick) {
        if (pick & (pick >> 1)) continue;  // adjacent path nodes
        NodeSet upsilon = first.nodes(d);
        for (std::size_t j = 0; j < rest.size(); ++j)
          if ((pick >> j) & 1U) upsilon = upsilon.with(rest[j]);
        if (!seen.insert(upsilon.bits()).second) continue;
        std::vector<int> word = longest_word(d.gamma(), upsilon);
        SemidirectElement image = phi(d, word, PhiMode::Plain);
        if (!image.is_identity()) continue;
        out.push_back({upsilon, b.attachment, k, word, image, phi(d, word, PhiMode::Hat).x});
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Torsion-freeness

namespace {

void append_torsion_free_steps(Certificate& c, const DaggerPtr& d, PhiMode mode) {
  const CoxeterSymbol& gamma = d->gamma();
  append_relation_steps(c, d, mode);

  add_cited(c, "finite-subgroups-visible",
            "every element of finite order in a Coxeter group is conjugate into a finite visible subgroup");
  add_cited(c, "involution-classes",
            "involution classes correspond to (-1)-type subsymbols modulo elementary equivalence");
  for (const auto& cls : equivalence_classes(gamma)) {
    NodeSet theta = cls.canonical();
    std::vector<int> word = longest_word(gamma, theta);
    add_step(c, "involution class " + class_label(*d, theta) + " survives", "machine-checked",
             Json{{"class", names_of(*d, theta.members())},
                  {"members", cls.members.size()},
                  {"word", names_of(*d, word)},
                  {"image", element_json(phi(*d, word, mode))}},
             [d, mode, word] { return !phi(*d, word, mode).is_identity(); });
  }

  // Odd torsion: connected finite visibles touching a pendant are B_K with
  // that pendant at the end of the 4-edge, so odd-order elements conjugate
  // into the type-A part inside Psi.
  std::vector<std::uint32_t> visibles;
  const std::uint32_t pendant_bits = (NodeSet::all(gamma.size()) - d->psi_nodes()).bits();
  for (std::uint32_t bits = 1; bits < (std::uint32_t{1} << gamma.size()); ++bits)
    if ((bits & pendant_bits) != 0 && connected_components(gamma, NodeSet(bits)).size() == 1 &&
        is_finite(gamma, NodeSet(bits)))
      visibles.push_back(bits);
  add_step(c, "finite visibles through pendants are of type B", "machine-checked",
           Json{{"visibles", visibles.size()}}, [d, visibles] {
             for (std::uint32_t bits : visibles) {
               NodeSet set(bits);
               NodeSet pendants = set - d->psi_nodes();
               if (pendants.size() != 1) return false;
               NodeSet rest = set - pendants;
               if (rest.empty()) continue;
               auto rc = recognize_component(d->gamma(), rest);
               if (!rc || rc->type.family != Family::A) return false;
             }
             return true;
           });
  add_cited(c, "odd-torsion-reduction",
            "odd-order elements of a visible B_K are conjugate into its visible A_{K-1}, which lies in Psi "
            "where the third component is the faithful reflection representation");

  for (const auto& b : b_visibles(*d)) {
    const bool faithful = faithful_on_Bk(*d, b);
    const int t = d->pendant(b.attachment);
    std::vector<int> word = longest_word(gamma, b.nodes(*d));
    const int eps = parity_character(gamma, t, word);
    const bool plain = d->attachments()[b.attachment].kind == AttachmentKind::Plain;
    std::vector<int> nodes = b.path;
    nodes.insert(nodes.begin(), t);
    add_step(c, "B_" + std::to_string(b.k()) + " " + class_label(*d, b.nodes(*d)), "machine-checked",
             Json{{"nodes", names_of(*d, nodes)}, {"faithful", faithful}, {"epsilon", eps}},
             [d, b, mode, faithful, eps, plain] {
               if (faithful) return faithful_on_Bk(*d, b);
               return mode == PhiMode::Hat && plain && b.k() % 2 == 1 && eps == 1;
             });
  }

  KernelIndex ki = kernel_index(*d, mode, true);
  add_step(c, "index", "machine-checked",
           Json{{"formula", ki.index.str()}, {"closure", ki.closure.note}, {"enumerated", ki.closure.enumerated}},
           [status = ki.closure.status] { return status != ClosureCheck::Status::Mismatch; });
}

}  // namespace

Certificate certify_torsion_free(const DaggerSymbol& d, PhiMode mode) {
  if (mode == PhiMode::Plain && d.ell() > 0)
    throw InputError("plain mode needs every attachment specially admissible");
  if (d.gamma().size() > kMaxEnumerationNodes) throw InputError("certification limited to 12 nodes");
  auto dp = std::make_shared<const DaggerSymbol>(d);
  Certificate c{"torsion-free", {}, kernel_index_formula(d, mode), 0};
  append_torsion_free_steps(c, dp, mode);
  return c;
}

// ---------------------------------------------------------------------------
// Cyclic extensions

CyclicExtension cyclic_extension(const DaggerSymbol& d, bool certify) {
  const WeylData& psi = d.psi();
  const int n = psi.rank;
  CyclicExtension ext;
  WeylElement third;
  if (psi.family == WeylFamily::E && n == 6) {
    // The visible D5 on nodes 2..6 has Coxeter number 8 = 2^3.
    WeylElement xi = coxeter_element(psi, NodeSet::all(n).without(0));
    const int h = element_order(xi, 64);
    ext.p = std::countr_zero(static_cast<unsigned>(h));
    ext.q = h >> ext.p;
    ext.target = find_target(xi, ext.q, ext.p);
    third = xi.pow(ext.q);
    ext.variant = "E6-D5";
  } else if (psi.family == WeylFamily::A && n % 2 == 1) {
    // Here d = 1 and xi^{h/2} itself is used (p = 1). The middle root alone
    // is not fixed by xi^{h/2} mod 2; the scan picks x_1 + ... + x_l.
    const int h = n + 1;
    WeylElement xi = coxeter_element(psi);
    ext.p = 1;
    ext.q = h / 2;
    third = xi.pow(h / 2);
    ext.target = find_target(xi, ext.q, ext.p);
    ext.variant = "A-odd";
  } else {
    const int h = psi.coxeter_number;
    if (h % 2 != 0) throw InputError("no cyclic extension: Coxeter number of " + psi.name() + " is odd");
    if (d_psi(psi).d <= 1) throw InputError("no cyclic extension: d_Psi <= 1 for " + psi.name());
    WeylElement xi = coxeter_element(psi);
    ext.p = std::countr_zero(static_cast<unsigned>(h));
    ext.q = h >> ext.p;
    ext.target = find_target(xi, ext.q, ext.p);
    third = xi.pow(ext.q);
    ext.variant = "generic";
  }
  ext.zeta = SemidirectElement{F2Vector(d.ell()), std::vector<F2Vector>(d.m(), ext.target), third};
  ext.index = kernel_index_formula(d, PhiMode::Hat) >> ext.p;
  if (!certify) return ext;

  auto dp = std::make_shared<const DaggerSymbol>(d);
  Certificate& c = ext.cert;
  c.kind = "cyclic-extension";
  c.index = ext.index;
  c.p = ext.p;

  Certificate kernel{"torsion-free", {}, 0, 0};
  append_torsion_free_steps(kernel, dp, PhiMode::Hat);
  for (auto& s : kernel.steps) {
    s.name = "kernel: " + s.name;
    c.steps.push_back(std::move(s));
  }

  const SemidirectElement zeta = ext.zeta;
  const int p = ext.p;
  add_step(c, "zeta has order 2^" + std::to_string(p), "machine-checked",
           Json{{"variant", ext.variant}, {"zeta", element_json(zeta)}, {"p", p}},
           [zeta, p] { return zeta.pow(1L << p).is_identity() && !zeta.pow(1L << (p - 1)).is_identity(); });

  const SemidirectElement half = zeta.pow(1L << (p - 1));
  const int top_rank = maximal_rank_class(psi).rank;
  add_step(c, "half-turn lies over the maximal involution class", "machine-checked",
           Json{{"half_turn", element_json(half)}, {"maximal_rank", top_rank}},
           [half, top_rank] {
             return half.x.is_zero() && (half.g * half.g).is_identity() && minus_one_dim(half.g) == top_rank;
           });

  add_step(c, "half-turn avoids the class of the maximal w_Delta", "machine-checked",
           Json{{"v", element_json(half)["v"]}}, [half] {
             KerIm ki = involution_ker_im(reduce_mod2(half.g));
             bool outside = false;
             for (F2Vector b : half.v) {
               if (!ki.ker.contains(b)) return false;
               if (!ki.im.contains(b)) outside = true;
             }
             return outside;
           });

  for (const auto& cls : equivalence_classes(d.gamma())) {
    NodeSet theta = cls.canonical();
    std::vector<int> word = longest_word(d.gamma(), theta);
    SemidirectElement y = phi(d, word, PhiMode::Hat);
    std::string reason;
    if (!y.x.is_zero()) reason = "parity part nonzero";
    else if (minus_one_dim(y.g) != top_rank) reason = "Weyl part in another class";
    else reason = "module part in im(g+1)";
    add_step(c, "involution class " + class_label(d, theta) + " misses <zeta>", "machine-checked",
             Json{{"class", names_of(d, theta.members())}, {"word", names_of(d, word)}, {"reason", reason}},
             [dp, word, top_rank] {
               SemidirectElement y = phi(*dp, word, PhiMode::Hat);
               if (!y.x.is_zero()) return true;
               if (minus_one_dim(y.g) != top_rank) return true;
               KerIm ki = involution_ker_im(reduce_mod2(y.g));
               return std::all_of(y.v.begin(), y.v.end(), [&](F2Vector b) { return ki.im.contains(b); });
             });
  }
  return ext;
}

}  // namespace cox
