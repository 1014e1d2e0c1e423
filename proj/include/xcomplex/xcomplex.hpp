#ifndef XCOMPLEX_XCOMPLEX_HPP
#define XCOMPLEX_XCOMPLEX_HPP

#include "xcomplex/crossed_complex.hpp"
#include "xcomplex/enumerate.hpp"
#include "xcomplex/error.hpp"
#include "xcomplex/evaluate.hpp"
#include "xcomplex/group.hpp"
#include "xcomplex/homotopy.hpp"
#include "xcomplex/invariant.hpp"
#include "xcomplex/io.hpp"
#include "xcomplex/library.hpp"
#include "xcomplex/presentation.hpp"
#include "xcomplex/random.hpp"
#include "xcomplex/rational.hpp"
#include "xcomplex/selfcheck.hpp"
#include "xcomplex/version.hpp"

#endif
