#ifndef ACM_ACM_HPP
#define ACM_ACM_HPP

#include "acm/branch.hpp"
#include "acm/builder.hpp"
#include "acm/core.hpp"
#include "acm/density.hpp"
#include "acm/errors.hpp"
#include "acm/matrix3.hpp"
#include "acm/roots.hpp"
#include "acm/types.hpp"
#include "acm/unitary.hpp"

#endif  // ACM_ACM_HPP
