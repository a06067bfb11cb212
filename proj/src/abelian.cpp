#include "nielsen/abelian.hpp"

#include "nielsen/smith.hpp"

namespace nielsen {

FgAbelianGroup::FgAbelianGroup(std::vector<Int> factors)
    : factors_(std::move(factors)) {
  bool zeroSeen = false;
  Int prev = 0;
  for (Int f : factors_) {
    if (f < 0) throw Error("invariant factors must be nonnegative");
    if (f == 1) throw Error("invariant factor 1 is not allowed");
    if (f == 0) {
      zeroSeen = true;
      continue;
    }
    if (zeroSeen) throw Error("free factors (0) must follow the torsion chain");
    if (prev != 0 && f % prev != 0)
      throw Error("torsion factors must form a divisibility chain");
    prev = f;
  }
}

FgAbelianGroup FgAbelianGroup::cyclic(Int n) {
  if (n == 1) return trivial();
  return FgAbelianGroup({n});
}

FgAbelianGroup FgAbelianGroup::freeAbelian(Index rank) {
  return FgAbelianGroup(std::vector<Int>(size_t(rank), 0));
}

FgAbelianGroup FgAbelianGroup::fromCyclicFactors(const std::vector<Int>& orders) {
  const Index k = Index(orders.size());
  IntMatrix rel = IntMatrix::Zero(k, k);
  for (Index i = 0; i < k; ++i) {
    if (orders[size_t(i)] < 0) throw Error("cyclic orders must be nonnegative");
    rel(i, i) = orders[size_t(i)];
  }
  auto s = smithNormalForm(rel);
  std::vector<Int> factors;
  for (Index i = 0; i < k; ++i)
    if (s.d(i, i) != 1) factors.push_back(s.d(i, i));
  return FgAbelianGroup(std::move(factors));
}

Index FgAbelianGroup::freeRank() const {
  Index r = 0;
  for (Int f : factors_)
    if (f == 0) ++r;
  return r;
}

Card FgAbelianGroup::order() const {
  if (!isFinite()) return Card::infinite();
  Wide p = 1;
  for (Int f : factors_) {
    p *= f;
    if (p > (Wide(1) << 62)) throw Error("group order overflow");
  }
  return Card::of(Int(p));
}

GroupElement::GroupElement(FgAbelianGroup group, IntVector coords)
    : group_(std::move(group)), coords_(std::move(coords)) {
  if (coords_.size() != group_.rank())
    throw Error("element coordinate count does not match the group rank");
  for (Index i = 0; i < coords_.size(); ++i)
    coords_[i] = modNonneg(coords_[i], group_.factor(i));
}

GroupElement GroupElement::zero(const FgAbelianGroup& group) {
  return GroupElement(group, IntVector::Zero(group.rank()));
}

bool GroupElement::isZero() const { return coords_.isZero(); }

GroupElement GroupElement::operator+(const GroupElement& other) const {
  if (!(group_ == other.group_)) throw Error("element groups differ");
  return GroupElement(group_, coords_ + other.coords_);
}

GroupElement GroupElement::operator-(const GroupElement& other) const {
  return *this + (-other);
}

GroupElement GroupElement::operator-() const {
  return GroupElement(group_, -coords_);
}

GroupElement GroupElement::times(Int k) const {
  return GroupElement(group_, k * coords_);
}

bool operator==(const GroupElement& a, const GroupElement& b) {
  return a.group_ == b.group_ && a.coords_ == b.coords_;
}

Card elementOrder(const GroupElement& x) {
  Int ord = 1;
  for (Index i = 0; i < x.coordinates().size(); ++i) {
    const Int d = x.group().factor(i);
    const Int c = x.coordinates()[i];
    if (d == 0) {
      if (c != 0) return Card::infinite();
    } else {
      ord = lcmChecked(ord, d / gcdInt(d, c));
    }
  }
  return Card::of(ord);
}

GroupHom::GroupHom(FgAbelianGroup domain, FgAbelianGroup codomain,
                   IntMatrix matrix)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      matrix_(std::move(matrix)) {
  if (matrix_.rows() != codomain_.rank() || matrix_.cols() != domain_.rank())
    throw Error("hom matrix shape does not match domain/codomain ranks");
  for (Index j = 0; j < matrix_.cols(); ++j) {
    const Int dj = domain_.factor(j);
    if (dj == 0) continue;
    for (Index i = 0; i < matrix_.rows(); ++i) {
      const Int ei = codomain_.factor(i);
      if (ei == 0) {
        if (matrix_(i, j) != 0)
          throw Error("a torsion generator cannot map into a Z factor");
      } else if ((Wide(dj) * matrix_(i, j)) % ei != 0) {
        throw Error("hom matrix does not respect generator orders");
      }
    }
  }
  for (Index i = 0; i < matrix_.rows(); ++i)
    for (Index j = 0; j < matrix_.cols(); ++j)
      matrix_(i, j) = modNonneg(matrix_(i, j), codomain_.factor(i));
}

GroupHom GroupHom::identity(const FgAbelianGroup& g) {
  return GroupHom(g, g, IntMatrix::Identity(g.rank(), g.rank()));
}

GroupHom GroupHom::zero(FgAbelianGroup domain, FgAbelianGroup codomain) {
  IntMatrix m = IntMatrix::Zero(codomain.rank(), domain.rank());
  return GroupHom(std::move(domain), std::move(codomain), std::move(m));
}

GroupElement GroupHom::operator()(const GroupElement& x) const {
  if (!(x.group() == domain_)) throw Error("element is not in the hom domain");
  return GroupElement(codomain_, matrix_ * x.coordinates());
}

GroupHom GroupHom::compose(const GroupHom& inner) const {
  if (!(inner.codomain_ == domain_))
    throw Error("hom composition domains do not chain");
  return GroupHom(inner.domain_, codomain_, matrix_ * inner.matrix_);
}

GroupHom GroupHom::operator+(const GroupHom& other) const {
  if (!(domain_ == other.domain_) || !(codomain_ == other.codomain_))
    throw Error("hom sum requires equal domain and codomain");
  return GroupHom(domain_, codomain_, matrix_ + other.matrix_);
}

GroupHom GroupHom::operator-(const GroupHom& other) const {
  if (!(domain_ == other.domain_) || !(codomain_ == other.codomain_))
    throw Error("hom difference requires equal domain and codomain");
  return GroupHom(domain_, codomain_, matrix_ - other.matrix_);
}

CokernelResult cokernel(const GroupHom& h) {
  const FgAbelianGroup& cod = h.codomain();
  const Index c = cod.rank();
  const Index d = h.matrix().cols();

  // quotient Z^c by the image columns plus the codomain relations
  IntMatrix rel = IntMatrix::Zero(c, d + c);
  rel.leftCols(d) = h.matrix();
  for (Index i = 0; i < c; ++i) rel(i, d + i) = cod.factor(i);

  auto s = smithNormalForm(rel);
  std::vector<Int> factors;
  std::vector<Index> kept;
  for (Index i = 0; i < c; ++i) {
    const Int di = s.d(i, i);
    if (di == 1) continue;
    kept.push_back(i);
    factors.push_back(di);
  }
  FgAbelianGroup q(std::move(factors));
  IntMatrix proj(Index(kept.size()), c);
  for (size_t r = 0; r < kept.size(); ++r)
    proj.row(Index(r)) = s.u.row(kept[r]);
  return {q, GroupHom(cod, q, std::move(proj))};
}

KernelResult kernel(const GroupHom& h) {
  const FgAbelianGroup& dom = h.domain();
  const FgAbelianGroup& cod = h.codomain();
  const Index d = dom.rank(), c = cod.rank();

  // x is in the kernel iff M x + diag(cod) y = 0 has an integer solution y
  IntMatrix b = IntMatrix::Zero(c, d + c);
  b.leftCols(d) = h.matrix();
  for (Index i = 0; i < c; ++i) b(i, d + i) = cod.factor(i);
  auto s1 = smithNormalForm(b);
  const Index nk = (d + c) - s1.rank();

  // lattice of kernel lifts in Z^d, together with the domain relations
  IntMatrix gens = IntMatrix::Zero(d, nk + d);
  gens.leftCols(nk) = s1.v.rightCols(nk).topRows(d);
  for (Index j = 0; j < d; ++j) gens(j, nk + j) = dom.factor(j);
  auto s2 = smithNormalForm(gens);
  const Index r2 = s2.rank();

  // basis of the lift lattice: column i is d2_i * (u2^-1 e_i)
  IntMatrix basis(d, r2);
  for (Index i = 0; i < r2; ++i) basis.col(i) = s2.d(i, i) * s2.uInv.col(i);

  // express each torsion relation f_j e_j in that basis
  std::vector<Index> torsion;
  for (Index j = 0; j < d; ++j)
    if (dom.factor(j) != 0) torsion.push_back(j);
  IntMatrix x(r2, Index(torsion.size()));
  for (size_t jj = 0; jj < torsion.size(); ++jj) {
    const Index j = torsion[jj];
    for (Index i = 0; i < r2; ++i) {
      const Wide num = Wide(dom.factor(j)) * s2.u(i, j);
      if (num % s2.d(i, i) != 0) throw Error("internal: kernel basis solve");
      x(i, Index(jj)) = Int(num / s2.d(i, i));
    }
  }

  // the kernel subgroup is Z^r2 modulo those relations
  auto s3 = smithNormalForm(x);
  KernelResult out{FgAbelianGroup{}, {}};
  std::vector<Int> factors;
  const Index diag3 = std::min(x.rows(), x.cols());
  for (Index i = 0; i < r2; ++i) {
    const Int di = i < diag3 ? s3.d(i, i) : 0;
    if (di == 1) continue;
    factors.push_back(di);
    out.generators.emplace_back(dom, basis * s3.uInv.col(i));
  }
  out.group = FgAbelianGroup(std::move(factors));
  return out;
}

std::string formatGroup(const FgAbelianGroup& g) {
  if (g.isTrivial()) return "0";
  std::string s;
  for (Int f : g.invariantFactors()) {
    if (f == 0) break;
    if (!s.empty()) s += " + ";
    s += "Z/" + std::to_string(f);
  }
  const Index free = g.freeRank();
  if (free > 0) {
    if (!s.empty()) s += " + ";
    s += free == 1 ? "Z" : "Z^" + std::to_string(free);
  }
  return s;
}

std::vector<GroupElement> enumerateElements(const FgAbelianGroup& g, Int cap) {
  Card n = g.order();
  if (!n.finite) throw Error("cannot enumerate an infinite group");
  if (n.value > cap) throw Error("group too large to enumerate");
  std::vector<GroupElement> out;
  out.reserve(size_t(n.value));
  IntVector c = IntVector::Zero(g.rank());
  for (Int count = 0; count < n.value; ++count) {
    out.emplace_back(g, c);
    for (Index i = 0; i < g.rank(); ++i) {
      if (++c[i] < g.factor(i)) break;
      c[i] = 0;
    }
  }
  return out;
}

}  // namespace nielsen
