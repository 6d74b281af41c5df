#ifndef ZERODIM_ZERODIM_HPP
#define ZERODIM_ZERODIM_HPP

#include "zerodim/bounds.hpp"
#include "zerodim/chow.hpp"
#include "zerodim/dyadic.hpp"
#include "zerodim/gallery.hpp"
#include "zerodim/linalg.hpp"
#include "zerodim/logval.hpp"
#include "zerodim/mpoly.hpp"
#include "zerodim/nss.hpp"
#include "zerodim/parse.hpp"
#include "zerodim/perron.hpp"
#include "zerodim/profile.hpp"
#include "zerodim/quotient.hpp"
#include "zerodim/rur.hpp"
#include "zerodim/scalar.hpp"
#include "zerodim/serialize.hpp"
#include "zerodim/suite.hpp"
#include "zerodim/triangular.hpp"
#include "zerodim/upoly.hpp"
#include "zerodim/variety.hpp"

#endif
