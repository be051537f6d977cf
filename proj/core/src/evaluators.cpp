#include "polyeval/evaluators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <thread>

#include "polyeval/errors.hpp"

namespace polyeval {
namespace {

constexpr std::size_t kSaturated = std::numeric_limits<std::size_t>::max();

// s^p, saturating at SIZE_MAX.
std::size_t checked_pow(std::size_t s, std::size_t p) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < p; ++i) {
    if (r > kSaturated / s) return kSaturated;
    r *= s;
  }
  return r;
}

ComplexScalar eval_base(BaseScheme base, std::span<const ComplexScalar> coeffs, ComplexScalar z,
                        OpCounter& ctr, const GoertzelOptions& gopts) {
  switch (base) {
    case BaseScheme::horner:
      return kernels::horner(coeffs, z, ctr);
    case BaseScheme::goertzel:
      return kernels::goertzel_or_direct(coeffs, z, ctr, gopts);
  }
  return {};
}

// a_j^{(m)} = sum_{k<s} a_{js+k}^{(m-1)} z_{m-1}^k for j in [first, last).
void stage_range(std::span<const ComplexScalar> prev, ComplexScalar z, std::size_t s,
                 std::size_t first, std::size_t last, BaseScheme base,
                 const GoertzelOptions& gopts, std::span<ComplexScalar> out, OpCounter& ctr) {
  for (std::size_t j = first; j < last; ++j) {
    out[j] = eval_base(base, prev.subspan(j * s, s), z, ctr, gopts);
  }
}

void compute_stage(std::span<const ComplexScalar> prev, ComplexScalar z, std::size_t s,
                   std::size_t blocks, BaseScheme base, const PemaOptions& opts,
                   std::span<ComplexScalar> out, OpCounter& ctr) {
  const std::size_t workers = std::min<std::size_t>(std::max(1u, opts.threads), blocks);
  if (workers <= 1) {
    stage_range(prev, z, s, 0, blocks, base, opts.goertzel, out, ctr);
    return;
  }
  std::vector<OpCounter> counts(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (blocks + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t first = w * chunk;
      const std::size_t last = std::min(blocks, first + chunk);
      pool.emplace_back([&, first, last, w] {
        stage_range(prev, z, s, first, last, base, opts.goertzel, out, counts[w]);
      });
    }
  }
  for (const auto& c : counts) ctr += c;
}

OpCounter delta(const OpCounter& after, const OpCounter& before) {
  return {after.real_mults - before.real_mults, after.real_adds - before.real_adds,
          after.complex_mults - before.complex_mults};
}

}  // namespace

std::string_view to_string(Algo algo) {
  switch (algo) {
    case Algo::horner:
      return "horner";
    case Algo::goertzel:
      return "goertzel";
    case Algo::pema_horner:
      return "pema-horner";
    case Algo::pema_goertzel:
      return "pema-goertzel";
  }
  return "unknown";
}

Algo parse_algo(std::string_view name) {
  for (Algo a : kAllAlgos) {
    if (to_string(a) == name) return a;
  }
  throw InvalidArgument("unknown algorithm '" + std::string(name) + "'");
}

PemaPlan PemaPlan::with_split(std::size_t degree, std::size_t s, std::size_t p) {
  if (s < 2 || p < 1) {
    throw InvalidArgument("PEMA plan needs s >= 2 and p >= 1");
  }
  const std::size_t padded = checked_pow(s, p);
  if (padded == kSaturated) {
    throw InvalidArgument("PEMA plan s^p overflows");
  }
  if (padded < degree) {
    throw PlanMismatch("s^p = " + std::to_string(padded) + " is below degree " +
                       std::to_string(degree));
  }
  return PemaPlan{s, p, padded, degree};
}

PemaPlan pema_plan(std::size_t degree, SplitPolicy policy) {
  const std::size_t target = std::max<std::size_t>(degree, 1);
  if (const auto* fp = std::get_if<FixedP>(&policy)) {
    if (fp->p < 1) throw InvalidArgument("fixed_p needs p >= 1");
    // Start just below the real p-th root and walk up.
    auto s = static_cast<std::size_t>(std::pow(static_cast<double>(target), 1.0 / fp->p));
    s = std::max<std::size_t>(2, s > 1 ? s - 1 : s);
    while (checked_pow(s, fp->p) < target) ++s;
    return PemaPlan::with_split(degree, s, fp->p);
  }
  const auto& fs = std::get<FixedS>(policy);
  if (fs.s < 2) throw InvalidArgument("fixed_s needs s >= 2");
  std::size_t p = 1;
  while (checked_pow(fs.s, p) < target) ++p;
  return PemaPlan::with_split(degree, fs.s, p);
}

namespace kernels {

ComplexScalar horner(std::span<const ComplexScalar> coeffs, ComplexScalar z, OpCounter& ctr) {
  ComplexScalar w = coeffs.back();
  for (std::size_t n = coeffs.size() - 1; n-- > 0;) {
    w = cadd(coeffs[n], cmul(z, w, ctr), ctr);
  }
  return w;
}

ComplexScalar goertzel(std::span<const ComplexScalar> coeffs, ComplexScalar z, OpCounter& ctr,
                       const GoertzelOptions& opts, GoertzelTrace* trace) {
  const std::size_t degree = coeffs.size() - 1;
  const double x = z.re;
  const double y = z.im;

  const double p_hat = 2.0 * x;
  ctr.real_mults += 1;

  if (opts.unit_circle_real_fast_path) {
    if (!std::all_of(coeffs.begin(), coeffs.end(), [](const auto& a) { return a.is_real(); })) {
      throw InvalidArgument("Goertzel fast path needs real coefficients");
    }
    // q = -1 on the unit circle: b_n = a_n + p b_{n+1} - b_{n+2}, all real.
    double b1 = coeffs[degree].re;
    double b2 = 0.0;
    if (trace) trace->b.assign(degree, ComplexScalar{});
    if (trace) trace->b[degree - 1] = b1;
    for (std::size_t n = degree - 1; n >= 1; --n) {
      const double bn = (coeffs[n].re + p_hat * b1) - b2;
      ctr.real_mults += 1;
      ctr.real_adds += 2;
      b2 = b1;
      b1 = bn;
      if (trace) trace->b[n - 1] = bn;
    }
    const double u = (coeffs[0].re + x * b1) - b2;
    const double v = y * b1;
    ctr.real_mults += 2;
    ctr.real_adds += 2;
    if (trace) {
      trace->p_hat = p_hat;
      trace->q_hat = -1.0;
      trace->u = u;
      trace->v = v;
    }
    return {u, v};
  }

  const double q_hat = -(x * x + y * y);
  ctr.real_mults += 2;
  ctr.real_adds += 1;

  ComplexScalar b1 = coeffs[degree];  // b_{n+1}
  ComplexScalar b2{};                 // b_{n+2}
  if (trace) {
    trace->b.assign(degree, ComplexScalar{});
    trace->b[degree - 1] = b1;
  }
  for (std::size_t n = degree - 1; n >= 1; --n) {
    const ComplexScalar bn = cadd(cadd(coeffs[n], rcmul(p_hat, b1, ctr), ctr), rcmul(q_hat, b2, ctr), ctr);
    b2 = b1;
    b1 = bn;
    if (trace) trace->b[n - 1] = bn;
  }
  const ComplexScalar u = cadd(cadd(coeffs[0], rcmul(x, b1, ctr), ctr), rcmul(q_hat, b2, ctr), ctr);
  const ComplexScalar v = rcmul(y, b1, ctr);
  ctr.real_adds += 2;
  if (trace) {
    trace->p_hat = p_hat;
    trace->q_hat = q_hat;
    trace->u = u;
    trace->v = v;
  }
  // w = u + i v with complex u, v.
  return {u.re - v.im, u.im + v.re};
}

ComplexScalar goertzel_or_direct(std::span<const ComplexScalar> coeffs, ComplexScalar z,
                                 OpCounter& ctr, const GoertzelOptions& opts) {
  switch (coeffs.size()) {
    case 1:
      return coeffs[0];
    case 2:
      return cadd(coeffs[0], cmul(coeffs[1], z, ctr), ctr);
    default:
      return goertzel(coeffs, z, ctr, opts);
  }
}

}  // namespace kernels

EvalOutcome horner(const Polynomial& poly, ComplexScalar z, OpCounter& ctr) {
  require_finite(z, "evaluation point");
  const OpCounter before = ctr;
  const ComplexScalar w = kernels::horner(poly.coeffs(), z, ctr);
  return {w, delta(ctr, before)};
}

EvalOutcome goertzel(const Polynomial& poly, ComplexScalar z, OpCounter& ctr,
                     const GoertzelOptions& opts) {
  require_finite(z, "evaluation point");
  if (poly.degree() < 2) {
    throw DegreeTooSmall("Goertzel recurrence needs degree >= 2, got " +
                         std::to_string(poly.degree()));
  }
  const OpCounter before = ctr;
  const ComplexScalar w = kernels::goertzel(poly.coeffs(), z, ctr, opts);
  return {w, delta(ctr, before)};
}

GoertzelTrace goertzel_traced(const Polynomial& poly, ComplexScalar z) {
  require_finite(z, "evaluation point");
  if (poly.degree() < 2) {
    throw DegreeTooSmall("Goertzel recurrence needs degree >= 2, got " +
                         std::to_string(poly.degree()));
  }
  GoertzelTrace trace;
  OpCounter scratch;
  kernels::goertzel(poly.coeffs(), z, scratch, {}, &trace);
  return trace;
}

ComplexScalar natural_power(ComplexScalar base, std::size_t s, OpCounter& ctr) {
  if (s < 1) throw InvalidArgument("natural_power needs s >= 1");
  ComplexScalar r = base;
  for (std::size_t k = 1; k < s; ++k) {
    r = cmul(r, base, ctr);
  }
  return r;
}

EvalOutcome pema(const Polynomial& poly, ComplexScalar z, const PemaPlan& plan, BaseScheme base,
                 OpCounter& ctr, const PemaOptions& opts, PemaTrace* trace) {
  require_finite(z, "evaluation point");
  if (plan.padded_degree < poly.degree()) {
    throw PlanMismatch("plan covers degree " + std::to_string(plan.padded_degree) +
                       ", polynomial has degree " + std::to_string(poly.degree()));
  }
  if (plan.s < 2 || plan.p < 1 || checked_pow(plan.s, plan.p) != plan.padded_degree) {
    throw InvalidArgument("inconsistent PEMA plan");
  }
  const OpCounter before = ctr;
  const std::size_t s = plan.s;

  // Padded a_0..a_{s^p}; entries past N are exact zeros.
  std::vector<ComplexScalar> current(plan.padded_degree + 1);
  std::copy(poly.coeffs().begin(), poly.coeffs().end(), current.begin());
  ComplexScalar point = z;
  if (trace) {
    trace->stages = {current};
    trace->points = {point};
  }

  for (std::size_t m = 1; m < plan.p; ++m) {
    const std::size_t blocks = (current.size() - 1) / s;
    std::vector<ComplexScalar> next(blocks + 1);
    next[blocks] = current.back();
    compute_stage(current, point, s, blocks, base, opts, std::span(next).first(blocks), ctr);
    point = natural_power(point, s, ctr);
    current = std::move(next);
    if (trace) {
      trace->stages.push_back(current);
      trace->points.push_back(point);
    }
  }

  const ComplexScalar w = eval_base(base, current, point, ctr, opts.goertzel);
  return {w, delta(ctr, before)};
}

EvalOutcome evaluate(Algo algo, const Polynomial& poly, ComplexScalar z, OpCounter& ctr,
                     const EvalConfig& config) {
  switch (algo) {
    case Algo::horner:
      return horner(poly, z, ctr);
    case Algo::goertzel: {
      require_finite(z, "evaluation point");
      const OpCounter before = ctr;
      const ComplexScalar w = kernels::goertzel_or_direct(poly.coeffs(), z, ctr, config.pema.goertzel);
      return {w, delta(ctr, before)};
    }
    case Algo::pema_horner:
      return pema(poly, z, pema_plan(poly.degree(), config.split), BaseScheme::horner, ctr, config.pema);
    case Algo::pema_goertzel:
      return pema(poly, z, pema_plan(poly.degree(), config.split), BaseScheme::goertzel, ctr,
                  config.pema);
  }
  throw InvalidArgument("unknown algorithm");
}

}  // namespace polyeval
