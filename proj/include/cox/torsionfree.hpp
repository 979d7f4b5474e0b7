#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cox/f2.hpp"
#include "cox/modtwo.hpp"
#include "cox/rational.hpp"
#include "cox/symbol.hpp"
#include "cox/weyl.hpp"

namespace cox {

enum class AttachmentKind { Plain, Special };
enum class PhiMode { Plain, Hat };

struct Attachment {
  int node;  // node of Psi
  AttachmentKind kind;
  WeightVector weight;
  F2Vector reduced;
};

// An irreducible Weyl symbol Psi with pendant nodes t_1..t_m joined by
// 4-labeled edges to distinct admissible nodes. In Gamma the nodes of Psi
// keep their indices 0..n-1 and t_i has index n + i; plain attachments come
// first.
class DaggerSymbol {
 public:
  const WeylData& psi() const { return psi_; }
  const std::vector<Attachment>& attachments() const { return attachments_; }
  const CoxeterSymbol& gamma() const { return gamma_; }

  int n() const { return psi_.rank; }
  int m() const { return static_cast<int>(attachments_.size()); }
  int ell() const { return ell_; }
  int pendant(int i) const { return n() + i; }
  bool is_pendant(int v) const { return v >= n(); }
  NodeSet psi_nodes() const { return NodeSet::all(n()); }

 private:
  friend DaggerSymbol build_dagger(const WeylData& psi, const std::vector<int>& nodes);
  WeylData psi_;
  std::vector<Attachment> attachments_;
  CoxeterSymbol gamma_;
  int ell_ = 0;
};

DaggerSymbol build_dagger(const WeylData& psi, const std::vector<int>& nodes);

// (x, v, g) in Z/2^ell x (prod L/2 semidirect W(Psi)).
struct SemidirectElement {
  F2Vector x;
  std::vector<F2Vector> v;
  WeylElement g;

  static SemidirectElement identity(int ell, int blocks, int n);
  SemidirectElement operator*(const SemidirectElement& o) const;
  bool operator==(const SemidirectElement&) const = default;
  bool is_identity() const;
  SemidirectElement pow(long k) const;
};

inline constexpr std::size_t kMaxWordLength = 10000;

SemidirectElement phi_generator(const DaggerSymbol& d, int node, PhiMode mode);
SemidirectElement phi(const DaggerSymbol& d, std::span<const int> word, PhiMode mode);

// Same construction with one shared module spanned by the orbits of all the
// weight vectors (equal to L/2 for admissible attachments).
SemidirectElement naive_phi(const DaggerSymbol& d, std::span<const int> word);

struct CertificateStep {
  std::string name;
  std::string basis;    // "machine-checked" or "cited: ..."
  std::string objects;  // JSON text describing what was checked
  bool ok;
  std::function<bool()> check;
};

struct Certificate {
  std::string kind;
  std::vector<CertificateStep> steps;
  BigInt index;
  int p = 0;

  bool ok() const;
  // Re-evaluates every step; true when all of them hold again.
  bool replay() const;
};

std::string certificate_json(const Certificate& c);

Certificate verify_relations(const DaggerSymbol& d, PhiMode mode);

inline constexpr std::uint64_t kClosureLimit = 10'000'000;

struct ClosureCheck {
  enum class Status { Verified, Mismatch, Skipped };
  Status status;
  std::uint64_t enumerated = 0;
  std::string note;
};

struct KernelIndex {
  BigInt index;
  bool torsion_free;  // false in plain mode with a plain attachment
  ClosureCheck closure;
};

BigInt kernel_index_formula(const DaggerSymbol& d, PhiMode mode);
KernelIndex kernel_index(const DaggerSymbol& d, PhiMode mode, bool enumerate = true);

// Order of the group generated by the generator images, by breadth-first
// closure; nullopt when the state does not pack into 64 bits or exceeds limit.
std::optional<std::uint64_t> image_order_by_closure(const DaggerSymbol& d, PhiMode mode,
                                                    std::uint64_t limit, std::string* why_not = nullptr);

// A visible B_k through t_i: t_i followed by a type-A path in Psi from s_i.
struct BVisible {
  int attachment;
  std::vector<int> path;

  int k() const { return static_cast<int>(path.size()) + 1; }
  NodeSet nodes(const DaggerSymbol& d) const;
};

std::vector<BVisible> b_visibles(const DaggerSymbol& d);
bool faithful_on_Bk(const DaggerSymbol& d, const BVisible& b);
// True when every B_k visible through t_i of that size is faithful.
bool faithful_on_Bk(const DaggerSymbol& d, int attachment, int k);

struct TorsionWitness {
  NodeSet upsilon;
  int attachment;
  int k;
  std::vector<int> word;
  SemidirectElement image;  // plain mode, verified identity
  F2Vector epsilon;         // parity part of the hat image
};

std::vector<TorsionWitness> torsion_witnesses(const DaggerSymbol& d);

Certificate certify_torsion_free(const DaggerSymbol& d, PhiMode mode);

struct CyclicExtension {
  std::string variant;  // "generic", "A-odd" or "E6-D5"
  SemidirectElement zeta;
  F2Vector target;
  int p;
  int q;
  BigInt index;
  Certificate cert;
};

// With certify = false only the extension data is computed; cert stays empty.
CyclicExtension cyclic_extension(const DaggerSymbol& d, bool certify = true);

}  // namespace cox
