#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace swmod {

using OdeState = std::vector<std::complex<double>>;
using OdeRhs = std::function<void(double, const OdeState&, OdeState&)>;

struct OdeOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    double max_step = 0.0;  // 0 means unlimited
};

struct OdeStats {
    long accepted_steps = 0;
    long rejected_steps = 0;
    long rhs_evaluations = 0;
};

// Adaptive Dormand-Prince 5(4) with a 4th-order continuous extension.
// Integrates from t0 to t1 (t1 > t0) and emits the dense-output solution at
// each requested time via on_output(t, y). output_times must be ascending and
// inside [t0, t1]. Throws StepSizeUnderflow / NonFinite.
OdeStats integrate_dopri5(const OdeRhs& rhs, const OdeState& y0, double t0, double t1,
                          const OdeOptions& opts, const std::vector<double>& output_times,
                          const std::function<void(double, const OdeState&)>& on_output);

}  // namespace swmod
