#ifndef A2S_GRADCHECK_HPP
#define A2S_GRADCHECK_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "a2s/tensor.hpp"

namespace a2s {

inline constexpr double kGradcheckStep = 1e-5;
inline constexpr double kLayerTolerance = 1e-4;
inline constexpr double kModelTolerance = 1e-3;

struct GradcheckResult {
    std::string name;
    double max_rel_error = 0.0;
    double tolerance = 0.0;
    std::size_t checked = 0; // number of scalar entries compared
    bool passed() const { return max_rel_error < tolerance; }
};

/// |a - n| / max(|a| + |n|, floor): tiny gradients are judged absolutely.
double relative_error(double analytic, double numeric, double floor = 1e-7);

/// Central differences of `loss` with respect to every `stride`-th entry of `x`
/// (perturbed in place and restored). Returns the worst relative error.
double max_gradient_error(Tensor64& x, const Tensor64& analytic, const std::function<double()>& loss,
                          std::size_t stride = 1, double h = kGradcheckStep, std::size_t* checked = nullptr);

/// Finite-difference suite over every layer (64-bit) plus the tiny end-to-end model.
std::vector<GradcheckResult> run_gradcheck(std::uint64_t seed = 1);

} // namespace a2s

#endif
