#include "cutcalc/bundled.hpp"

namespace cutcalc {

namespace {

// Cutting the 6-dimensional flag of flags in C^3 below its middle critical
// level. The lower piece retracts to a 2-sphere A, the lower cut space is
// A x CP^2, and the upper cut space is a Bott-Samelson 6-manifold whose ring
// is known in closed form; the iso block checks it.
constexpr std::string_view kFlagU3 = R"(# Flag-manifold cut: lower piece retracts to a 2-sphere A.

algebra Cminus {               # A x CP^2
  gen a:2, b:2;
  rel a^2;
  rel b^3;
  top 6;
}

algebra M {                    # full flag manifold on C^3, Schubert presentation
  gen u:2, v:2;
  rel u*v - u^2 - v^2;
  rel u^3;
  rel v^3;
  rel u^2*v - u*v^2;
  rel u^2*v^2;                 # degree 8: vacuous under top 6, kept for completeness
  top 6;
}

algebra Mminus {               # retract of the lower piece, a 2-sphere
  gen abar:2;
  rel abar^2;
  top 6;
}

map p: Cminus -> Mminus { a -> abar; b -> 0; }
map i: M -> Mminus { u -> abar; v -> 0; }

algebra bott_samelson {        # known ring of the upper cut space
  gen a:2, b:2, c:2;
  rel a^2;
  rel b^2 + b*a;
  rel c^2 - c*a + c*b;
  top 6;
}

cut {
  minus = Cminus;
  total = M;
  common = Mminus;
  p = p;
  i = i;
  n = 6;
  delta = [
    { cminus: b^2, m: v^2 },
    { cminus: a*b^2, m: u*v^2 }
  ];
  pd = b;
  expect {
    cplus = 1,0,3,0,3,0,1;
    c = 1,0,3,0,4,0,2;
    c0 = 1,0,2,0,1,0,0;
  }
}

iso {
  target = bott_samelson;
  a -> { cminus: b, m: v };
  b -> { cminus: -b, m: 0 };
  c -> { cminus: a + b, m: u };
}
)";

// Cutting a 4-manifold with second Betti number 1 just above an isolated
// minimum: the lower piece is a disk, both cut pieces are projective planes,
// and the upper cut space is a one-point blowup.
constexpr std::string_view kBlowupCp2 = R"(# One-point blowup: cutting a 4-manifold near an isolated minimum.

algebra Cminus { gen a:2; rel a^3; top 4; }
algebra M      { gen u:2; rel u^3; top 4; }
algebra Mminus { top 4; }      # disk: Q in degree 0 only

map p: Cminus -> Mminus { a -> 0; }
map i: M -> Mminus { u -> 0; }

cut {
  minus = Cminus;
  total = M;
  common = Mminus;
  p = p;
  i = i;
  n = 4;
  delta = [ { cminus: a^2, m: u^2 } ];
  pd = a;
  expect {
    cplus = 1,0,2,0,1;
    c = 1,0,2,0,2;
    c0 = 1,0,1,0,0;
  }
}
)";

}  // namespace

std::string_view flag_u3_source() {
    return kFlagU3;
}

std::string_view blowup_cp2_source() {
    return kBlowupCp2;
}

const std::vector<BundledExample>& bundled_examples() {
    static const std::vector<BundledExample> examples = {
        {"flag_u3.cut", kFlagU3},
        {"blowup_cp2.cut", kBlowupCp2},
    };
    return examples;
}

}  // namespace cutcalc
