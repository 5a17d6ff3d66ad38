#include "ssm/mpfloat.hpp"

namespace ssm {

thread_local long MpFloat::default_prec_ = 128;

}  // namespace ssm
