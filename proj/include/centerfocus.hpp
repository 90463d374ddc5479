#ifndef CENTERFOCUS_HPP
#define CENTERFOCUS_HPP

#include <centerfocus/budget.hpp>
#include <centerfocus/hilbert.hpp>
#include <centerfocus/io.hpp>
#include <centerfocus/lie.hpp>
#include <centerfocus/lyapunov.hpp>
#include <centerfocus/matching.hpp>
#include <centerfocus/matrix.hpp>
#include <centerfocus/poly.hpp>
#include <centerfocus/poly_io.hpp>
#include <centerfocus/rational.hpp>
#include <centerfocus/system.hpp>
#include <centerfocus/verify.hpp>

#endif  // CENTERFOCUS_HPP
