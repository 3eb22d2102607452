#include <doctest.h>

#include "hf/errors.hpp"
#include "hf/weyl.hpp"

using namespace hf;

TEST_CASE("Weyl algebra multiplication") {
  using W = WeylAlgebraElement;
  CHECK(W::y() * W::x() == W::x() * W::y() + W::scalar(1));
  CHECK(to_string(W::y() * W::y() * W::x()) == "x y^2 + 2 y");
  CHECK(to_string(W::y() * W::term(3, 0)) == "x^3 y + 3 x^2");
}

TEST_CASE("oscillator representation of the undeformed algebra") {
  const auto report = weil_check();
  CHECK(report.ok());
  CHECK(report.relations.size() == 10);
  CHECK(report.casimir_image == Rational(-3, 32));
}

TEST_CASE("a wrong image is reported as a relation violation") {
  auto img = weil_images();
  img.image[static_cast<std::size_t>(Generator::H)] = WeylAlgebraElement::term(1, 1);
  bool violated = false;
  for (const auto &[rel, residual] : relation_residuals(img, Polynomial::constant(1)))
    violated = violated || !residual.is_zero();
  CHECK(violated);
}
