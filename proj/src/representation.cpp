#include "cluster_roots/representation.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace cluster_roots {

void Representation::check_shapes() const {
  for (const auto& a : arrows) {
    if (a.source >= dims.size() || a.target >= dims.size())
      throw std::invalid_argument("representation arrow endpoint out of range");
    if (a.map.rows() != dims[a.target] || a.map.cols() != dims[a.source])
      throw std::invalid_argument("representation matrix shape does not match the dimension vector");
  }
}

Representation RepSample::to_representation() const {
  Representation r;
  r.field = PrimeField(p);
  r.dims.resize(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) r.dims[i] = static_cast<std::size_t>(d[i]);
  std::size_t next = 0;
  for (const auto& g : quiver.arrows)
    for (int m = 0; m < g.multiplicity; ++m) {
      if (next >= matrices.size()) throw std::invalid_argument("sample has fewer matrices than arrows");
      r.arrows.push_back({static_cast<std::size_t>(g.source - 1), static_cast<std::size_t>(g.target - 1), matrices[next++]});
    }
  if (next != matrices.size()) throw std::invalid_argument("sample has more matrices than arrows");
  r.check_shapes();
  return r;
}

RepSample sample_generic_rep(const QuiverSpec& quiver, const IntVector& d, std::uint32_t p, std::uint64_t rng_seed) {
  const PrimeField field(p);
  if (d.size() != static_cast<std::size_t>(quiver.n))
    throw std::invalid_argument("dimension vector length does not match the quiver");
  if (!d.is_nonnegative() || d.is_zero())
    throw std::invalid_argument("dimension vector must be nonnegative and nonzero");

  std::mt19937_64 gen(rng_seed);
  // Rejection sampling keeps the draw uniform and independent of the standard
  // library's distribution implementation.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % p;
  auto draw = [&] {
    std::uint64_t x;
    do x = gen();
    while (x >= limit);
    return static_cast<std::uint32_t>(x % p);
  };

  RepSample s{quiver, d, {}, p, rng_seed};
  for (const auto& g : quiver.arrows)
    for (int m = 0; m < g.multiplicity; ++m) {
      const auto rows = static_cast<std::size_t>(d[g.target - 1]);
      const auto cols = static_cast<std::size_t>(d[g.source - 1]);
      FpMatrix a(rows, cols);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a(i, j) = draw();
      s.matrices.push_back(std::move(a));
    }
  return s;
}

std::size_t hom_dim(const Representation& m, const Representation& n) {
  if (!(m.field == n.field)) throw std::invalid_argument("representations over different fields");
  if (m.vertex_count() != n.vertex_count() || m.arrows.size() != n.arrows.size())
    throw std::invalid_argument("representations of different quivers");
  for (std::size_t a = 0; a < m.arrows.size(); ++a)
    if (m.arrows[a].source != n.arrows[a].source || m.arrows[a].target != n.arrows[a].target)
      throw std::invalid_argument("representations of different quivers");
  m.check_shapes();
  n.check_shapes();

  const PrimeField& f = m.field;
  const std::size_t verts = m.vertex_count();
  // f_i is an n.dims[i] x m.dims[i] matrix, stored row-major from offset[i].
  std::vector<std::size_t> offset(verts + 1, 0);
  for (std::size_t i = 0; i < verts; ++i) offset[i + 1] = offset[i] + m.dims[i] * n.dims[i];
  const std::size_t unknowns = offset[verts];
  if (unknowns == 0) return 0;

  std::size_t equations = 0;
  for (const auto& a : m.arrows) equations += n.dims[a.target] * m.dims[a.source];
  if (equations == 0) return unknowns;

  // For a: s -> t, entry (r, c) of  f_t M_a - N_a f_s  (an n_t x m_s matrix).
  FpMatrix sys(equations, unknowns);
  std::size_t row = 0;
  for (std::size_t ai = 0; ai < m.arrows.size(); ++ai) {
    const auto& ma = m.arrows[ai];
    const auto& na = n.arrows[ai];
    const std::size_t s = ma.source, t = ma.target;
    const std::size_t ms = m.dims[s], mt = m.dims[t], ns = n.dims[s], nt = n.dims[t];
    for (std::size_t r = 0; r < nt; ++r)
      for (std::size_t c = 0; c < ms; ++c, ++row) {
        for (std::size_t l = 0; l < mt; ++l) {
          auto& x = sys(row, offset[t] + r * mt + l);
          x = f.add(x, ma.map(l, c));
        }
        for (std::size_t l = 0; l < ns; ++l) {
          auto& x = sys(row, offset[s] + l * ms + c);
          x = f.sub(x, na.map(r, l));
        }
      }
  }
  return unknowns - rank(f, std::move(sys));
}

std::size_t hom_dim(const RepSample& m, const RepSample& n) {
  if (!(m.quiver == n.quiver)) throw std::invalid_argument("samples of different quivers");
  if (m.p != n.p) throw std::invalid_argument("samples over different fields");
  return hom_dim(m.to_representation(), n.to_representation());
}

namespace {

bool active(const Representation& r, const Representation::Arrow& a) {
  return r.dims[a.source] > 0 && r.dims[a.target] > 0;
}

struct Candidate {
  ReflectionStep step;
  long long new_dim = 0;
};

// Smallest vertex that is a sink or source of the support with a strictly
// smaller reflected dimension.
std::optional<Candidate> next_candidate(const Representation& r) {
  for (std::size_t k = 0; k < r.vertex_count(); ++k) {
    if (r.dims[k] == 0) continue;
    long long in_dim = 0, out_dim = 0;
    bool has_in = false, has_out = false;
    for (const auto& a : r.arrows) {
      if (!active(r, a)) continue;
      if (a.target == k) {
        has_in = true;
        in_dim += static_cast<long long>(r.dims[a.source]);
      }
      if (a.source == k) {
        has_out = true;
        out_dim += static_cast<long long>(r.dims[a.target]);
      }
    }
    if (has_in == has_out) continue;  // interior vertex, or isolated in the support
    const long long dk = static_cast<long long>(r.dims[k]);
    const long long reflected = (has_in ? in_dim : out_dim) - dk;
    if (reflected < dk) return Candidate{{k, has_in}, reflected};
  }
  return std::nullopt;
}

// Applies the reflection at a sink (kernel construction) or source (cokernel
// construction).  Returns false, leaving r untouched, when the structure map is not
// surjective / injective.
bool apply_reflection(Representation& r, const Candidate& cand) {
  const PrimeField& f = r.field;
  const std::size_t k = cand.step.vertex;
  const std::size_t dk = r.dims[k];
  if (cand.new_dim < 0) return false;
  const auto new_dim = static_cast<std::size_t>(cand.new_dim);

  std::vector<std::size_t> blocks;    // active arrows at k, in arrow order
  std::vector<std::size_t> dormant;   // arrows at k into the zero part
  std::size_t total = 0;
  for (std::size_t i = 0; i < r.arrows.size(); ++i) {
    const auto& a = r.arrows[i];
    if (a.source != k && a.target != k) continue;
    if (!active(r, a)) {
      dormant.push_back(i);
      continue;
    }
    blocks.push_back(i);
    total += r.dims[a.source == k ? a.target : a.source];
  }

  if (cand.step.at_sink) {
    // phi = [M_a1 | M_a2 | ...] : (+) M_s -> M_k; the new space at k is ker phi.
    FpMatrix phi(dk, total);
    std::size_t col = 0;
    for (auto i : blocks) {
      const auto& m = r.arrows[i].map;
      for (std::size_t x = 0; x < m.rows(); ++x)
        for (std::size_t y = 0; y < m.cols(); ++y) phi(x, col + y) = m(x, y);
      col += m.cols();
    }
    if (rank(f, phi) != dk) return false;
    const FpMatrix ker = nullspace(f, phi);  // total x new_dim
    col = 0;
    for (auto i : blocks) {
      auto& a = r.arrows[i];
      const std::size_t ds = r.dims[a.source];
      FpMatrix m(ds, new_dim);
      for (std::size_t x = 0; x < ds; ++x)
        for (std::size_t y = 0; y < new_dim; ++y) m(x, y) = ker(col + x, y);
      col += ds;
      std::swap(a.source, a.target);
      a.map = std::move(m);
    }
  } else {
    // psi = [M_a1; M_a2; ...] : M_k -> (+) M_t; the new space at k is coker psi,
    // realised by a matrix whose rows span the left kernel of psi.
    FpMatrix psi(total, dk);
    std::size_t row = 0;
    for (auto i : blocks) {
      const auto& m = r.arrows[i].map;
      for (std::size_t x = 0; x < m.rows(); ++x)
        for (std::size_t y = 0; y < m.cols(); ++y) psi(row + x, y) = m(x, y);
      row += m.rows();
    }
    if (rank(f, psi) != dk) return false;
    const FpMatrix left = nullspace(f, psi.transposed());  // total x new_dim
    row = 0;
    for (auto i : blocks) {
      auto& a = r.arrows[i];
      const std::size_t dt = r.dims[a.target];
      FpMatrix m(new_dim, dt);
      for (std::size_t x = 0; x < new_dim; ++x)
        for (std::size_t y = 0; y < dt; ++y) m(x, y) = left(row + y, x);
      row += dt;
      std::swap(a.source, a.target);
      a.map = std::move(m);
    }
  }
  r.dims[k] = new_dim;
  for (auto i : dormant) {
    auto& a = r.arrows[i];
    std::swap(a.source, a.target);
    a.map = FpMatrix(r.dims[a.target], r.dims[a.source]);
  }
  return true;
}

std::size_t end_unknowns(const Representation& m) {
  std::size_t u = 0;
  for (auto d : m.dims) u += d * d;
  return u;
}

}  // namespace

Reduction reduce_by_reflections(const Representation& m) {
  m.check_shapes();
  Reduction out{m, {}, std::nullopt};
  while (auto cand = next_candidate(out.reduced)) {
    if (!apply_reflection(out.reduced, *cand)) {
      out.split_simple = cand->step;
      break;
    }
    out.steps.push_back(cand->step);
  }
  return out;
}

std::size_t end_dim(const Representation& m) {
  if (end_unknowns(m) <= kDirectEndLimit) return hom_dim(m, m);
  const Reduction red = reduce_by_reflections(m);
  return hom_dim(red.reduced, red.reduced);
}

std::size_t end_dim(const RepSample& m) { return end_dim(m.to_representation()); }

bool has_scalar_endomorphisms(const Representation& m) {
  if (end_unknowns(m) <= kDirectEndLimit) return hom_dim(m, m) == 1;
  const Reduction red = reduce_by_reflections(m);
  if (red.split_simple) return false;
  return hom_dim(red.reduced, red.reduced) == 1;
}

}  // namespace cluster_roots
