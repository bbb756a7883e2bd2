#include "detail/connection_kernels.hpp"

namespace qseries::detail {

#ifdef QSERIES_FAULT_FLIP_C2_SIGN
double second_coefficient_sign() { return -1.0; }
#else
double second_coefficient_sign() { return 1.0; }
#endif

}  // namespace qseries::detail
