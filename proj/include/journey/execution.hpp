#ifndef JOURNEY_EXECUTION_HPP_
#define JOURNEY_EXECUTION_HPP_

namespace journey {

// serial is the reference path; parallel runs the OpenMP kernels and falls
// back to one thread when OpenMP is unavailable.
enum class Execution { serial, parallel };

int max_threads() noexcept;

}  // namespace journey

#endif  // JOURNEY_EXECUTION_HPP_
