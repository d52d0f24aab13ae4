#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "d4shear/braid.hpp"
#include "d4shear/parallel.hpp"

namespace d4shear::braid {

namespace {

constexpr double kBranchTol = 1e-12;

complex guarded_log(complex x) {
  if (std::abs(x) < kBranchTol) throw std::domain_error("branch error: log argument within 1e-12 of zero");
  return std::log(x);
}

// 1 + G e^{y} + e^{2y}
complex flip_argument(complex g, complex y) { return 1.0 + g * std::exp(y) + std::exp(2.0 * y); }

bool close(complex a, complex b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

double triple_distance(const Triple<complex>& a, const Triple<complex>& b) {
  return std::max({std::abs(a.g12 - b.g12), std::abs(a.g23 - b.g23), std::abs(a.g13 - b.g13),
                   std::abs(a.w12 - b.w12), std::abs(a.w23 - b.w23), std::abs(a.w13 - b.w13)});
}

bool triples_close(const Triple<complex>& a, const Triple<complex>& b, double tol) {
  return close(a.g12, b.g12, tol) && close(a.g23, b.g23, tol) && close(a.g13, b.g13, tol) &&
         close(a.w12, b.w12, tol) && close(a.w23, b.w23, tol) && close(a.w13, b.w13, tol);
}

template <class T>
std::array<T, 3> permute(const std::array<T, 3>& x, const std::array<int, 3>& perm) {
  return {x[perm[0]], x[perm[1]], x[perm[2]]};
}

template <class T>
std::array<T, 3> unpermute(const std::array<T, 3>& x, const std::array<int, 3>& perm) {
  std::array<T, 3> r{};
  for (int i = 0; i < 3; ++i) r[perm[i]] = x[i];
  return r;
}

constexpr std::array<int, 3> kB12Relabel{2, 0, 1};

ShearState swap_petals(ShearState s) {
  std::swap(s.g[1], s.g[2]);
  std::swap(s.labels[1], s.labels[2]);
  return s;
}

ShearState apply_variant(const FlipVariant& v, const ShearState& s) {
  ShearState r = swap_petals(s);
  const complex a = static_cast<double>(v.a);
  r.y[0] = s.y[0] + static_cast<double>(v.s1) * guarded_log(flip_argument(s.g[1], a * s.y[1]));
  r.y[1] = s.y[2] + static_cast<double>(v.s2) * guarded_log(flip_argument(s.g[1], -a * s.y[1]));
  r.y[2] = static_cast<double>(v.s3) * s.y[1];
  return r;
}

std::array<complex, 3> perimeters(const std::array<complex, 3>& g) {
  std::array<complex, 3> p{};
  for (int i = 0; i < 3; ++i) p[i] = 2.0 * std::acosh(g[i] / 2.0);
  return p;
}

}  // namespace

Triple<complex> evaluate_triple(const ShearState& s) {
  const auto& Y = s.y;
  const auto& G = s.g;
  auto e = [](complex x) { return std::exp(x); };
  const complex ginf = g_infinity_value(s);
  return {e(Y[0] + Y[1]) + e(-Y[0] - Y[1]) + e(-Y[0] + Y[1]) + G[0] * e(Y[1]) + G[1] * e(-Y[0]),
          e(Y[1] + Y[2]) + e(-Y[1] - Y[2]) + e(-Y[1] + Y[2]) + G[1] * e(Y[2]) + G[2] * e(-Y[1]),
          e(Y[2] + Y[0]) + e(-Y[2] - Y[0]) + e(-Y[2] + Y[0]) + G[2] * e(Y[0]) + G[0] * e(-Y[2]),
          G[0] * G[1] + G[2] * ginf,
          G[1] * G[2] + G[0] * ginf,
          G[0] * G[2] + G[1] * ginf};
}

complex g_infinity_value(const ShearState& s) {
  const complex t = s.y[0] + s.y[1] + s.y[2];
  return std::exp(t) + std::exp(-t);
}

ShearState displayed_flip(const ShearState& s) { return apply_variant(FlipVariant{}, s); }

ShearState flip_b23(const ShearState& s) { return apply_variant(FlipVariant{-1, 1, -1, -1}, s); }

ShearState flip_b23_inverse(const ShearState& s) {
  ShearState r = swap_petals(s);
  const complex y2 = -s.y[2];
  r.y[1] = y2;
  r.y[0] = s.y[0] + guarded_log(flip_argument(r.g[1], -y2));
  r.y[2] = s.y[1] - guarded_log(flip_argument(r.g[1], y2));
  return r;
}

ShearState braid_shear(const ShearState& s, Generator g) {
  switch (g) {
    case Generator::b23: return flip_b23(s);
    case Generator::b23_inv: return flip_b23_inverse(s);
    case Generator::b12_inv: {
      ShearState r = flip_b23(s);
      return {permute(r.y, kB12Relabel), permute(r.g, kB12Relabel), permute(r.labels, kB12Relabel)};
    }
    case Generator::b12: {
      const ShearState r{unpermute(s.y, kB12Relabel), unpermute(s.g, kB12Relabel),
                         unpermute(s.labels, kB12Relabel)};
      return flip_b23_inverse(r);
    }
  }
  return s;
}

ShearState braid_shear(ShearState s, const BraidWord& word) {
  for (Generator g : word.letters()) s = braid_shear(s, g);
  return s;
}

std::string FlipVariant::str() const {
  std::ostringstream os;
  os << "s1=" << s1 << ",s2=" << s2 << ",s3=" << s3 << ",a=" << a;
  if (is_displayed()) os << " (displayed)";
  return os.str();
}

ShearState apply_candidate(const FlipCandidate& c, const ShearState& s) {
  ShearState r;
  if (c.convention == CoordinateConvention::tilde) {
    r = apply_variant(c.variant, s);
  } else {
    // Flip the plain coordinates Y = Y~ + P/2, then return to the tilde frame.
    const auto p = perimeters(s.g);
    ShearState plain = s;
    for (int i = 0; i < 3; ++i) plain.y[i] += p[i] / 2.0;
    r = apply_variant(c.variant, plain);
    const auto pr = perimeters(r.g);
    for (int i = 0; i < 3; ++i) r.y[i] -= pr[i] / 2.0;
  }
  return {permute(r.y, c.permutation), permute(r.g, c.permutation), permute(r.labels, c.permutation)};
}

namespace {

std::vector<FlipCandidate> all_candidates() {
  std::vector<FlipCandidate> out;
  std::array<int, 3> perm{0, 1, 2};
  std::vector<std::array<int, 3>> perms;
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (auto conv : {CoordinateConvention::tilde, CoordinateConvention::plain}) {
    for (int s1 : {1, -1}) {
      for (int s2 : {1, -1}) {
        for (int s3 : {1, -1}) {
          for (int a : {1, -1}) {
            for (const auto& p : perms) out.push_back({FlipVariant{s1, s2, s3, a}, p, conv});
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

RealizationReport realization_search(const std::vector<ShearState>& samples, double tol, int max_word) {
  if (samples.size() < 20) throw std::invalid_argument("realization_search needs at least 20 samples");
  const std::size_t fit = std::max<std::size_t>(20, samples.size() / 2);
  const auto words = reduced_words(max_word);
  const auto candidates = all_candidates();

  RealizationReport report;
  report.samples = samples.size();
  report.candidates_tested = candidates.size() * words.size();

  // Word images of every fitting sample.
  std::vector<std::vector<Triple<complex>>> targets(words.size());
  for (std::size_t w = 0; w < words.size(); ++w) {
    for (std::size_t i = 0; i < fit; ++i) targets[w].push_back(act_classical(words[w], evaluate_triple(samples[i])));
  }

  const auto per_candidate = par::map_indices<std::vector<std::size_t>>(
      candidates.size(), par::Execution::parallel, [&](std::size_t c) {
        std::vector<Triple<complex>> images;
        try {
          for (std::size_t i = 0; i < fit; ++i) images.push_back(evaluate_triple(apply_candidate(candidates[c], samples[i])));
        } catch (const std::domain_error&) {
          return std::vector<std::size_t>{};
        }
        std::vector<std::size_t> hits;
        for (std::size_t w = 0; w < words.size(); ++w) {
          bool ok = true;
          for (std::size_t i = 0; i < fit && ok; ++i) ok = triples_close(images[i], targets[w][i], tol);
          if (ok) hits.push_back(w);
        }
        return hits;
      });

  for (std::size_t c = 0; c < candidates.size(); ++c) {
    for (std::size_t w : per_candidate[c]) report.matches.push_back({candidates[c], words[w]});
  }

  // Residual table of the displayed flip against the identity and each generator.
  const FlipCandidate displayed{};
  for (std::size_t w = 0; w < words.size() && words[w].size() <= 1; ++w) {
    double worst = 0.0;
    for (std::size_t i = 0; i < fit; ++i) {
      worst = std::max(worst, triple_distance(evaluate_triple(apply_candidate(displayed, samples[i])), targets[w][i]));
    }
    report.displayed_residuals.emplace_back(words[w].empty() ? std::string("id") : words[w].str(), worst);
  }
  for (const auto& m : report.matches) {
    if (m.candidate.variant.is_displayed()) report.displayed_matches = true;
  }

  // Holdout: C and G_inf preserved by every match on unseen samples.
  for (const auto& m : report.matches) {
    for (std::size_t i = fit; i < samples.size(); ++i) {
      const ShearState after = apply_candidate(m.candidate, samples[i]);
      const auto before_t = evaluate_triple(samples[i]);
      const auto after_t = evaluate_triple(after);
      if (!close(central_element(before_t), central_element(after_t), tol) ||
          !close(g_infinity_value(samples[i]), g_infinity_value(after), tol)) {
        report.holdout_invariant = false;
      }
    }
  }

  std::ostringstream os;
  if (report.matches.empty()) {
    os << "no candidate matches; displayed formulas inconsistent as transcribed";
  } else {
    os << report.matches.size() << " candidate(s) match; displayed flip "
       << (report.displayed_matches ? "matches" : "matches no word") << "; first: "
       << report.matches.front().candidate.variant.str() << " -> "
       << (report.matches.front().word.empty() ? "id" : report.matches.front().word.str());
  }
  report.summary = os.str();
  return report;
}

std::vector<ShearState> generic_shear_samples(std::uint64_t seed, std::size_t count) {
  std::vector<ShearState> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    auto rng = par::sample_rng(seed, i);
    std::uniform_real_distribution<double> re(-0.7, 0.7), im(-0.3, 0.3), g(0.0, 1.9);
    for (int k = 0; k < 3; ++k) out[i].y[k] = complex(re(rng), im(rng));
    for (int k = 0; k < 3; ++k) out[i].g[k] = complex(g(rng), 0.0);
  }
  return out;
}

}  // namespace d4shear::braid
