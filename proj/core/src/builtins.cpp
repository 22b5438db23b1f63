#include "necklace/frobenius.hpp"

namespace necklace {

namespace {

// Point: the ground field alone.  The product in degree -2 has nowhere to
// land, so only the coalgebra structure is nontrivial.
const char* kPoint = R"(
name point
frobenius_degree 2
simply_connected true

basis
e0 0

unit e0

counit
e0 -> 1

coproduct
e0 -> 1 (e0 (x) e0)
)";

// Homology of the 2-sphere with the intersection product; the top class
// acts as the unit.
const char* kS2 = R"(
name S2
frobenius_degree 2
simply_connected true

basis
e0 0
e2 2

unit e0

counit
e0 -> 1

product
e2 e2 -> 1 e2
e2 e0 -> 1 e0
e0 e2 -> 1 e0

coproduct
e0 -> 1 (e0 (x) e0)
e2 -> 1 (e2 (x) e0)
e2 -> 1 (e0 (x) e2)
)";

// For odd m a graded-commutative product kills e3.e3, and associativity
// then forfeits the rest; only the coalgebra survives.
const char* kS3 = R"(
name S3
frobenius_degree 3
simply_connected true

basis
e0 0
e3 3

unit e0

counit
e0 -> 1

coproduct
e0 -> 1 (e0 (x) e0)
e3 -> 1 (e3 (x) e0)
e3 -> 1 (e0 (x) e3)
)";

const char* kS4 = R"(
name S4
frobenius_degree 4
simply_connected true

basis
e0 0
e4 4

unit e0

counit
e0 -> 1

product
e4 e4 -> 1 e4
e4 e0 -> 1 e0
e0 e4 -> 1 e0

coproduct
e0 -> 1 (e0 (x) e0)
e4 -> 1 (e4 (x) e0)
e4 -> 1 (e0 (x) e4)
)";

// Kuenneth square of the S2 table: a = [S2 x pt], b = [pt x S2], t the
// fundamental class.
const char* kS2xS2 = R"(
name S2xS2
frobenius_degree 4
simply_connected true

basis
e0 0
a 2
b 2
t 4

unit e0

counit
e0 -> 1

product
t t -> 1 t
t a -> 1 a
a t -> 1 a
t b -> 1 b
b t -> 1 b
t e0 -> 1 e0
e0 t -> 1 e0
a b -> 1 e0
b a -> 1 e0

coproduct
e0 -> 1 (e0 (x) e0)
a -> 1 (a (x) e0)
a -> 1 (e0 (x) a)
b -> 1 (b (x) e0)
b -> 1 (e0 (x) b)
t -> 1 (t (x) e0)
t -> 1 (a (x) b)
t -> 1 (b (x) a)
t -> 1 (e0 (x) t)
)";

// Complex projective plane: c the hyperplane class, c.c the point.
const char* kCP2 = R"(
name CP2
frobenius_degree 4
simply_connected true

basis
e0 0
c 2
t 4

unit e0

counit
e0 -> 1

product
t t -> 1 t
t c -> 1 c
c t -> 1 c
t e0 -> 1 e0
e0 t -> 1 e0
c c -> 1 e0

coproduct
e0 -> 1 (e0 (x) e0)
c -> 1 (c (x) e0)
c -> 1 (e0 (x) c)
t -> 1 (t (x) e0)
t -> 1 (c (x) c)
t -> 1 (e0 (x) t)
)";

// Contractible two-generator extension: dy = x exercises the internal
// differential everywhere.  Zero product (a unit cannot coexist with the
// degenerate pairing under module compatibility).
const char* kDcontr = R"(
name Dcontr
frobenius_degree 2
simply_connected true

basis
e0 0
x 2
y 3

unit e0

counit
e0 -> 1

d
y -> 1 x

coproduct
e0 -> 1 (e0 (x) e0)
x -> 1 (x (x) e0)
x -> 1 (e0 (x) x)
y -> 1 (y (x) e0)
y -> 1 (e0 (x) y)
)";

// d and a nontrivial reduced coproduct together: dz = w, dy = v, with
// Delta(w) and Delta(z) linked so that d stays a coderivation.
const char* kDmix = R"(
name Dmix
frobenius_degree 4
simply_connected true

basis
e0 0
u 2
v 2
y 3
w 4
z 5

unit e0

counit
e0 -> 1

d
y -> 1 v
z -> 1 w

coproduct
e0 -> 1 (e0 (x) e0)
u -> 1 (u (x) e0)
u -> 1 (e0 (x) u)
v -> 1 (v (x) e0)
v -> 1 (e0 (x) v)
y -> 1 (y (x) e0)
y -> 1 (e0 (x) y)
w -> 1 (w (x) e0)
w -> 1 (u (x) v)
w -> 1 (v (x) u)
w -> 1 (e0 (x) w)
z -> 1 (z (x) e0)
z -> 1 (u (x) y)
z -> 1 (y (x) u)
z -> 1 (e0 (x) z)
)";

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {"point", "S2",  "S3",     "S4",
                                                 "S2xS2", "CP2", "Dcontr", "Dmix"};
  return names;
}

Frobenius builtin(const std::string& name) {
  const char* doc = nullptr;
  if (name == "point") doc = kPoint;
  else if (name == "S2") doc = kS2;
  else if (name == "S3") doc = kS3;
  else if (name == "S4") doc = kS4;
  else if (name == "S2xS2") doc = kS2xS2;
  else if (name == "CP2") doc = kCP2;
  else if (name == "Dcontr") doc = kDcontr;
  else if (name == "Dmix") doc = kDmix;
  if (!doc) throw LoadError(LoadError::Kind::Parse, "unknown builtin '" + name + "'");
  return load_frobenius(doc);
}

}  // namespace necklace
