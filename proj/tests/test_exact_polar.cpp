#include <cmath>
#include <random>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "cplab/exact_polar.hpp"
#include "cplab/serialize.hpp"

using namespace cplab;

TEST_CASE("make_cp constructs m/p amplitudes on the n/p phase grid") {
    ExactPolar x = make_cp(1, 0, 4);
    REQUIRE(x.amp2 == Rational(1, 4));
    REQUIRE(x.turn == 0);
    REQUIRE(!x.zero);

    x = make_cp(0, 3, 4);  // zero value, canonical turn 0
    REQUIRE(x.zero);
    REQUIRE(x.amp2 == 0);
    REQUIRE(x.turn == 0);

    x = make_cp(2, 1, 4);
    REQUIRE(x.amp2 == Rational(1, 2));
    REQUIRE(x.turn == Rational(1, 4));

    REQUIRE_THROWS_AS(make_cp(1, 0, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(make_cp(-1, 0, 4), std::invalid_argument);
    REQUIRE(make_cp(1, -1, 4).turn == Rational(3, 4));  // n reduced mod p
}

TEST_CASE("membership checks reduced denominators against p") {
    REQUIRE(is_member(ExactPolar::from_amp2_turn(Rational(1, 2), Rational(1, 4)), 4));
    REQUIRE(!is_member(ExactPolar::from_amp2_turn(Rational(1, 3), 0), 4));
    REQUIRE(is_member(ExactPolar::from_amp2_turn(3, Rational(1, 6)), 12));  // m=36, n=2
    REQUIRE(is_member(ExactPolar::zero_value(), 1));
    REQUIRE_THROWS_AS(is_member(ExactPolar::zero_value(), 0), std::invalid_argument);

    REQUIRE(minimal_p(ExactPolar::from_amp2_turn(Rational(1, 2), Rational(1, 4))) == 4);
    REQUIRE(minimal_p(ExactPolar::zero_value()) == 1);
}

TEST_CASE("multiplication is exact phase addition") {
    ExactPolar a = ExactPolar::from_amp2_turn(1, Rational(1, 8));
    ExactPolar prod = mul(a, a);
    REQUIRE(prod.amp2 == 1);
    REQUIRE(prod.turn == Rational(1, 4));

    REQUIRE(mul(a, ExactPolar::zero_value()).zero);

    // commutative and associative (exact rational equality)
    std::mt19937_64 rng(41);
    auto rnd = [&]() {
        return ExactPolar::from_amp2_turn(Rational(rng() % 50, 1 + rng() % 20),
                                          Rational(rng() % 30, 1 + rng() % 30));
    };
    for (int i = 0; i < 200; ++i) {
        ExactPolar x = rnd(), y = rnd(), z = rnd();
        REQUIRE(mul(x, y) == mul(y, x));
        REQUIRE(mul(mul(x, y), z) == mul(x, mul(y, z)));
    }
}

TEST_CASE("products of C_8 members land in C_64") {
    std::vector<ExactPolar> c8;
    for (int m = 0; m <= 16; ++m)
        for (int n = 0; n < 8; ++n) c8.push_back(make_cp(m, n, 8));
    for (const auto& a : c8)
        for (const auto& b : c8) REQUIRE(is_member(mul(a, b), 64));
}

TEST_CASE("multiplicative closure p -> p^2, exhaustively for p <= 16") {
    for (int p : {1, 2, 3, 4, 6, 8, 12, 16}) {
        std::vector<ExactPolar> cp;
        for (int m = 0; m <= 2 * p; ++m)
            for (int n = 0; n < p; ++n) cp.push_back(make_cp(m, n, p));
        BigInt p2 = BigInt(p) * p;
        for (const auto& a : cp) {
            REQUIRE(is_member(a, p));
            for (const auto& b : cp) REQUIRE(is_member(mul(a, b), p2));
        }
    }
}

TEST_CASE("equal-amplitude addition: cancellation and Niven-exceptional closure") {
    // e^{i0} + e^{i pi} = 0
    AddResult r = try_add(ExactPolar::from_amp2_turn(1, 0),
                          ExactPolar::from_amp2_turn(1, Rational(1, 2)));
    REQUIRE(r.value.zero);
    REQUIRE(r.verdict.tag == Closure::Member);

    // e^{i0} + e^{i 2pi/3} = e^{i pi/3}: amp2 = 1, turn 1/6
    r = try_add(ExactPolar::from_amp2_turn(1, 0),
                ExactPolar::from_amp2_turn(1, Rational(1, 3)));
    REQUIRE(r.verdict.tag == Closure::Member);
    REQUIRE(r.value.amp2 == 1);
    REQUIRE(r.value.turn == Rational(1, 6));
    REQUIRE(r.verdict.p == 6);

    // e^{i0} + e^{i pi/4}: amp2 = 2 + sqrt(2), irrational for every p
    r = try_add(ExactPolar::from_amp2_turn(1, 0),
                ExactPolar::from_amp2_turn(1, Rational(1, 8)));
    REQUIRE(r.verdict.tag == Closure::NonMember);
    REQUIRE(r.verdict.surd_amp2.has_value());
    REQUIRE(r.verdict.surd_amp2->a == 2);
    REQUIRE(r.verdict.surd_amp2->b == 1);
    REQUIRE(r.verdict.surd_amp2->d == 2);
    double approx = to_float50(r.value.amp2).convert_to<double>();
    REQUIRE(approx == Catch::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("half-angle sign flips the result turn when |dturn| > 1/2") {
    // e^{2 pi i 0.9} + e^{i0}: half-angle cosine negative, phase = mean + 1/2
    AddResult r = try_add(ExactPolar::from_amp2_turn(1, Rational(9, 10)),
                          ExactPolar::from_amp2_turn(1, 0));
    REQUIRE(r.verdict.tag == Closure::NonMember);  // cos(2pi*9/10) is a surd
    REQUIRE(r.value.turn == Rational(19, 20));     // (0.9/2) + 1/2
}

TEST_CASE("p = 12 equal-amplitude closure table matches the exceptional set") {
    // Member exactly when the relative turn is 0, 1/6, 1/4, 1/3, 1/2 or a complement
    std::set<int> member_diffs = {0, 2, 3, 4, 6, 8, 9, 10};
    for (int i = 0; i < 12; ++i) {
        for (int j = 0; j < 12; ++j) {
            AddResult r = try_add(make_cp(12, i, 12), make_cp(12, j, 12));
            int d = ((i - j) % 12 + 12) % 12;
            if (member_diffs.count(d)) {
                REQUIRE(r.verdict.tag == Closure::Member);
            } else {
                REQUIRE(r.verdict.tag == Closure::NonMember);
            }
        }
    }
}

TEST_CASE("unequal amplitudes: collinear sums with square products stay exact") {
    // 2 e^{i0} + 1 e^{i0} = 3 e^{i0}
    AddResult r = try_add(ExactPolar::from_amp2_turn(4, 0), ExactPolar::from_amp2_turn(1, 0));
    REQUIRE(r.verdict.tag == Closure::Member);
    REQUIRE(r.value.amp2 == 9);
    REQUIRE(r.value.turn == 0);

    // 2 e^{i0} + 1 e^{i pi} = 1 e^{i0}
    r = try_add(ExactPolar::from_amp2_turn(4, 0),
                ExactPolar::from_amp2_turn(1, Rational(1, 2)));
    REQUIRE(r.verdict.tag == Closure::Member);
    REQUIRE(r.value.amp2 == 1);
    REQUIRE(r.value.turn == 0);

    // 1 e^{i pi} + 2 e^{i0} = 1 e^{i0}: larger amplitude wins the phase
    r = try_add(ExactPolar::from_amp2_turn(1, Rational(1, 2)),
                ExactPolar::from_amp2_turn(4, 0));
    REQUIRE(r.value.turn == 0);

    // sqrt(2) e^{i0} + 1 e^{i0}: amp2 = 3 + 2 sqrt(2), irrational
    r = try_add(ExactPolar::from_amp2_turn(2, 0), ExactPolar::from_amp2_turn(1, 0));
    REQUIRE(r.verdict.tag == Closure::NonMember);
}

TEST_CASE("unequal amplitudes: perpendicular and surd-collapse cases") {
    // 1 e^{i0} + 2 e^{i pi/2}: amp2 = 5 exactly, turn undecided
    AddResult r = try_add(ExactPolar::from_amp2_turn(1, 0),
                          ExactPolar::from_amp2_turn(4, Rational(1, 4)));
    REQUIRE(r.verdict.tag == Closure::Indeterminate);
    REQUIRE(r.verdict.exact_amp2.has_value());
    REQUIRE(*r.verdict.exact_amp2 == 5);
    REQUIRE(r.value.amp2 == 5);

    // sqrt(3) e^{i pi/6} + 1 e^{i0}: cross term 2 sqrt(3) cos(pi/6) = 3, amp2 = 7
    r = try_add(ExactPolar::from_amp2_turn(3, Rational(1, 12)),
                ExactPolar::from_amp2_turn(1, 0));
    REQUIRE(r.verdict.tag == Closure::Indeterminate);
    REQUIRE(r.verdict.exact_amp2.has_value());
    REQUIRE(*r.verdict.exact_amp2 == 7);

    // degree > 2 relative angle with unequal amplitudes is never rational
    r = try_add(ExactPolar::from_amp2_turn(1, Rational(1, 7)),
                ExactPolar::from_amp2_turn(4, 0));
    REQUIRE(r.verdict.tag == Closure::NonMember);
}

TEST_CASE("adding zero is the identity with a Member verdict") {
    ExactPolar a = make_cp(3, 2, 8);
    AddResult r = try_add(a, ExactPolar::zero_value());
    REQUIRE(r.value == a);
    REQUIRE(r.verdict.tag == Closure::Member);
    REQUIRE(r.verdict.p == 8);
}

TEST_CASE("singular-limit gap: every multiple of 8 has a NonMember pair") {
    for (int p : {8, 16, 24, 64, 1024}) {
        AddResult r = try_add(make_cp(p, 0, p), make_cp(p, p / 8, p));
        REQUIRE(r.verdict.tag == Closure::NonMember);
    }
}

TEST_CASE("momentum difference follows the sine analogue") {
    // k dx = pi/6: amplitude 1/2, amp2 = 1/4, member for p divisible by 4
    MomentumResult m = momentum_difference(Rational(1, 12), 1);
    REQUIRE(m.verdict.tag == Closure::Member);
    REQUIRE(m.amplitude_factor.amp2 == Rational(1, 4));
    REQUIRE(m.verdict.p == 4);
    REQUIRE(is_member(m.amplitude_factor, 4));
    REQUIRE(is_member(m.amplitude_factor, 8));

    // k dx = pi/2: amplitude 1
    m = momentum_difference(Rational(1, 4), 1);
    REQUIRE(m.verdict.tag == Closure::Member);
    REQUIRE(m.amplitude_factor.amp2 == 1);

    // k dx = pi/4: amplitude sqrt(2)/2 irrational -> NonMember
    m = momentum_difference(Rational(1, 8), 1);
    REQUIRE(m.verdict.tag == Closure::NonMember);
    REQUIRE(m.amplitude_factor.amp2 == Rational(1, 2));  // the square is exact anyway

    // negative sine flips the amplitude-factor phase by 1/2
    m = momentum_difference(Rational(7, 12), 1);
    REQUIRE(m.verdict.tag == Closure::Member);
    REQUIRE(m.amplitude_factor.turn == Rational(1, 2));

    // zero sine gives the zero value
    m = momentum_difference(Rational(1, 2), 1);
    REQUIRE(m.amplitude_factor.zero);
    REQUIRE(m.verdict.tag == Closure::Member);

    // dx scales the amplitude: sin(pi/6) / (1/3) = 3/2
    m = momentum_difference(Rational(1, 12), Rational(1, 3));
    REQUIRE(m.amplitude_factor.amp2 == Rational(9, 4));

    REQUIRE_THROWS_AS(momentum_difference(Rational(1, 12), 0), std::invalid_argument);
    REQUIRE_THROWS_AS(momentum_difference(Rational(1, 12), Rational(-1, 2)), std::invalid_argument);
}

TEST_CASE("verdict round trip: Member values pass is_member at the reported p") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        ExactPolar a = make_cp(rng() % 12, rng() % 24, 1 + rng() % 24);
        ExactPolar b = make_cp(rng() % 12, rng() % 24, 1 + rng() % 24);
        AddResult r = try_add(a, b);
        if (r.verdict.tag == Closure::Member) {
            REQUIRE(is_member(r.value, r.verdict.p));
            // the reported p is minimal
            REQUIRE(minimal_p(r.value) == r.verdict.p);
        }
    }
}

TEST_CASE("exact polar JSON round trip") {
    ExactPolar a = make_cp(5, 3, 8);
    Json j = to_json(a);
    REQUIRE(j.at("amp2_num") == 5);
    REQUIRE(j.at("amp2_den") == 8);
    ExactPolar back = exact_polar_from_json(j);
    REQUIRE(back == a);

    // big values serialize as strings and survive
    ExactPolar big = ExactPolar::from_amp2_turn(
        Rational(boost::multiprecision::pow(BigInt(7), 40), 3), Rational(1, 3));
    REQUIRE(exact_polar_from_json(to_json(big)) == big);
}
