#include "edgespec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace edgespec {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Component {
  std::vector<int> vertices;
  // Local CSR.
  std::vector<std::size_t> offsets;
  std::vector<int> targets;
  std::size_t edges() const { return targets.size() / 2; }
};

struct ComponentSpectrum {
  double top = 0.0;
  double second = kNaN;  // NaN when the component has one vertex
  std::vector<double> perron;
  double residual = 0.0;
  long iterations = 0;
  bool dense = true;
};

std::vector<Component> split_components(const SparseGraph& g) {
  std::vector<int> local(g.n, -1);
  std::vector<Component> out;
  for (int s = 0; s < g.n; ++s) {
    if (local[s] >= 0) continue;
    Component c;
    local[s] = 0;
    c.vertices.push_back(s);
    for (std::size_t head = 0; head < c.vertices.size(); ++head) {
      for (int u : g.neighbors(c.vertices[head])) {
        if (local[u] < 0) {
          local[u] = static_cast<int>(c.vertices.size());
          c.vertices.push_back(u);
        }
      }
    }
    c.offsets.assign(c.vertices.size() + 1, 0);
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
      for (int u : g.neighbors(c.vertices[i])) c.targets.push_back(local[u]);
      c.offsets[i + 1] = c.targets.size();
    }
    out.push_back(std::move(c));
  }
  return out;
}

void multiply(const Component& c, const std::vector<double>& x, std::vector<double>& y) {
  const std::size_t s = c.vertices.size();
  for (std::size_t i = 0; i < s; ++i) {
    double acc = 0.0;
    for (std::size_t k = c.offsets[i]; k < c.offsets[i + 1]; ++k) acc += x[c.targets[k]];
    y[i] = acc;
  }
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

void normalize(std::vector<double>& x) {
  const double norm = std::sqrt(dot(x, x));
  for (double& v : x) v /= norm;
}

double max_residual(const std::vector<double>& ax, const std::vector<double>& x, double lambda) {
  double r = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) r = std::max(r, std::abs(ax[i] - lambda * x[i]));
  return r;
}

// Cyclic Jacobi on a dense symmetric matrix (row-major, n x n). On return
// the diagonal of `a` holds the eigenvalues and column j of `vecs` the
// eigenvector for a[j][j].
void jacobi(std::vector<double>& a, int n, std::vector<double>& vecs) {
  vecs.assign(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) vecs[static_cast<std::size_t>(i) * n + i] = 1.0;
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
  double frob = 0.0;
  for (double v : a) frob += v * v;
  if (frob == 0.0) return;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) off += at(p, q) * at(p, q);
    }
    if (off <= 1e-32 * frob) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          double& vkp = vecs[static_cast<std::size_t>(k) * n + p];
          double& vkq = vecs[static_cast<std::size_t>(k) * n + q];
          const double x = vkp;
          const double y = vkq;
          vkp = c * x - s * y;
          vkq = s * x + c * y;
        }
      }
    }
  }
}

// Makes a Perron candidate nonnegative and unit.
void fix_sign(std::vector<double>& x) {
  const double sum = std::accumulate(x.begin(), x.end(), 0.0);
  if (sum < 0) {
    for (double& v : x) v = -v;
  }
  for (double& v : x) v = std::max(v, 0.0);
  normalize(x);
}

ComponentSpectrum dense_component(const Component& c) {
  const int s = static_cast<int>(c.vertices.size());
  std::vector<double> a(static_cast<std::size_t>(s) * s, 0.0);
  for (int i = 0; i < s; ++i) {
    for (std::size_t k = c.offsets[i]; k < c.offsets[i + 1]; ++k) {
      a[static_cast<std::size_t>(i) * s + c.targets[k]] = 1.0;
    }
  }
  std::vector<double> vecs;
  jacobi(a, s, vecs);
  std::vector<int> order(s);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    return a[static_cast<std::size_t>(i) * s + i] > a[static_cast<std::size_t>(j) * s + j];
  });
  ComponentSpectrum out;
  out.top = a[static_cast<std::size_t>(order[0]) * s + order[0]];
  if (s > 1) out.second = a[static_cast<std::size_t>(order[1]) * s + order[1]];
  out.perron.resize(s);
  for (int i = 0; i < s; ++i) out.perron[i] = vecs[static_cast<std::size_t>(i) * s + order[0]];
  fix_sign(out.perron);
  std::vector<double> ax(s);
  multiply(c, out.perron, ax);
  out.top = dot(out.perron, ax);
  out.residual = max_residual(ax, out.perron, out.top);
  return out;
}

ComponentSpectrum iterative_component(const Component& c, const SpectralOptions& opts) {
  const std::size_t s = c.vertices.size();
  ComponentSpectrum out;
  out.dense = false;
  std::vector<double> x(s);
  std::size_t max_deg = 0;
  for (std::size_t i = 0; i < s; ++i) {
    const std::size_t d = c.offsets[i + 1] - c.offsets[i];
    x[i] = static_cast<double>(d);
    max_deg = std::max(max_deg, d);
  }
  normalize(x);
  // Any positive shift makes lambda1 + shift strictly dominant in modulus;
  // this one is also an upper bound on |lambda_min|.
  const double shift = std::min(static_cast<double>(max_deg),
                                std::sqrt(2.0 * static_cast<double>(c.edges())));
  std::vector<double> ax(s);
  double lambda = 0.0;
  double residual = std::numeric_limits<double>::infinity();
  long it = 0;
  for (; it < opts.max_iterations; ++it) {
    multiply(c, x, ax);
    lambda = dot(x, ax);
    residual = max_residual(ax, x, lambda);
    if (residual <= opts.tol) break;
    for (std::size_t i = 0; i < s; ++i) x[i] = ax[i] + shift * x[i];
    normalize(x);
  }
  fix_sign(x);
  multiply(c, x, ax);
  out.top = dot(x, ax);
  out.residual = max_residual(ax, x, out.top);
  out.perron = x;
  out.iterations = it;

  if (s < 2 || !opts.want_lambda2) return out;

  // Deflated power iteration on A + lambda1 I restricted to perron^perp;
  // that operator is positive semidefinite there, so its dominant
  // eigenvalue is lambda2 + lambda1.
  std::vector<double> z(s);
  std::uint64_t state = 0x9e3779b97f4a7c15ULL;
  for (std::size_t i = 0; i < s; ++i) {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    z[i] = static_cast<double>(state >> 11) / 9007199254740992.0 - 0.5;
  }
  auto project = [&](std::vector<double>& v) {
    const double p = dot(v, x);
    for (std::size_t i = 0; i < s; ++i) v[i] -= p * x[i];
  };
  project(z);
  normalize(z);
  std::vector<double> az(s);
  double mu = 0.0;
  long it2 = 0;
  for (; it2 < opts.max_iterations; ++it2) {
    multiply(c, z, az);
    mu = dot(z, az);
    if (max_residual(az, z, mu) <= opts.tol) break;
    for (std::size_t i = 0; i < s; ++i) z[i] = az[i] + out.top * z[i];
    project(z);
    normalize(z);
  }
  out.second = mu;
  out.iterations += it2;
  return out;
}

SpectralResult solve(const SparseGraph& g, const SpectralOptions& opts) {
  if (!(opts.tol > 0)) throw std::invalid_argument("spectral_radius: tol must be positive");
  if (g.n == 0) throw std::invalid_argument("spectral_radius: graph has no vertices");
  SpectralResult result;
  result.method = opts.force_iterative ? SpectralMethod::kIterative : SpectralMethod::kDenseExact;
  if (g.num_edges() == 0) {
    result.lambda1 = 0.0;
    result.lambda2 = 0.0;
    result.perron.assign(g.n, 1.0 / std::sqrt(static_cast<double>(g.n)));
    result.residual = 0.0;
    return result;
  }
  const auto comps = split_components(g);
  std::vector<ComponentSpectrum> spectra;
  spectra.reserve(comps.size());
  bool any_iterative = false;
  for (const auto& c : comps) {
    if (c.vertices.size() == 1) {
      ComponentSpectrum single;
      single.perron = {1.0};
      spectra.push_back(single);
      continue;
    }
    const bool dense =
        !opts.force_iterative &&
        (opts.force_dense || static_cast<int>(c.vertices.size()) <= opts.dense_cap);
    spectra.push_back(dense ? dense_component(c) : iterative_component(c, opts));
    any_iterative = any_iterative || !dense;
  }
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& sp : spectra) best = std::max(best, sp.top);
  std::size_t chosen = 0;
  while (spectra[chosen].top < best - opts.tol) ++chosen;

  double second = spectra[chosen].second;
  for (std::size_t i = 0; i < spectra.size(); ++i) {
    if (i == chosen) continue;
    if (std::isnan(second) || spectra[i].top > second) second = spectra[i].top;
  }
  if (!opts.want_lambda2 && !spectra[chosen].dense) second = kNaN;

  result.lambda1 = spectra[chosen].top;
  result.lambda2 = second;
  result.perron.assign(g.n, 0.0);
  for (std::size_t i = 0; i < comps[chosen].vertices.size(); ++i) {
    result.perron[comps[chosen].vertices[i]] = spectra[chosen].perron[i];
  }
  result.residual = spectra[chosen].residual;
  for (const auto& sp : spectra) result.iterations += sp.iterations;
  result.method = any_iterative ? SpectralMethod::kIterative : SpectralMethod::kDenseExact;
  result.converged = result.residual <= opts.tol;
  return result;
}

}  // namespace

std::string_view to_string(SpectralMethod m) {
  return m == SpectralMethod::kDenseExact ? "dense-exact" : "iterative";
}

SpectralResult spectral_radius(const Graph& g, const SpectralOptions& opts) {
  return solve(to_sparse(g), opts);
}

SpectralResult spectral_radius(const Graph& g, double tol) {
  SpectralOptions opts;
  opts.tol = tol;
  return spectral_radius(g, opts);
}

SpectralResult spectral_radius(const SparseGraph& g, const SpectralOptions& opts) {
  return solve(g, opts);
}

std::vector<double> adjacency_spectrum(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
  for (const Edge& e : g.edges()) {
    a[static_cast<std::size_t>(e.u) * n + e.v] = 1.0;
    a[static_cast<std::size_t>(e.v) * n + e.u] = 1.0;
  }
  std::vector<double> vecs;
  jacobi(a, n, vecs);
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = a[static_cast<std::size_t>(i) * n + i];
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double rayleigh(const Graph& g, std::span<const double> x) {
  if (static_cast<int>(x.size()) != g.num_vertices()) {
    throw std::invalid_argument("rayleigh: vector length differs from vertex count");
  }
  double norm2 = 0.0;
  for (double v : x) norm2 += v * v;
  if (std::abs(std::sqrt(norm2) - 1.0) > 1e-9) {
    throw std::invalid_argument("rayleigh: vector is not a unit vector");
  }
  double acc = 0.0;
  for (const Edge& e : g.edges()) acc += x[e.u] * x[e.v];
  return 2.0 * acc;
}

std::vector<double> two_level_vector(int n, std::span<const int> a, std::span<const int> c) {
  if (a.empty() || c.empty()) throw std::invalid_argument("two_level_vector: empty part");
  std::vector<double> x(n, 0.0);
  std::vector<char> seen(n, 0);
  auto fill = [&](std::span<const int> part, double value) {
    for (int v : part) {
      if (v < 0 || v >= n) throw std::invalid_argument("two_level_vector: vertex out of range");
      if (seen[v]) throw std::invalid_argument("two_level_vector: parts overlap");
      seen[v] = 1;
      x[v] = value;
    }
  };
  fill(a, 1.0 / std::sqrt(2.0 * static_cast<double>(a.size())));
  fill(c, 1.0 / std::sqrt(2.0 * static_cast<double>(c.size())));
  return x;
}

}  // namespace edgespec
