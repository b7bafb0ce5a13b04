#include <doctest.h>

#include "pcc/irreducibles.hpp"
#include "pcc/matrix.hpp"

using namespace pcc;

TEST_CASE("arithmetic and code round-trip") {
    FieldPtr F = Field::prime(3);
    const Mat I = Mat::identity(F, 2);
    Mat X(F, 2, 2);
    X.at(0, 0) = 1;
    X.at(0, 1) = 2;
    X.at(1, 0) = 1;
    CHECK(X + X == X.scaled(2));
    CHECK(X * I == X);
    CHECK(I * X == X);
    CHECK((X - X) == Mat(F, 2, 2));
    CHECK(Mat::from_code(F, 2, X.code()) == X);
    for (std::uint64_t code = 0; code < 81; ++code)
        CHECK(Mat::from_code(F, 2, code).code() == code);
}

TEST_CASE("rank, det, kernel") {
    FieldPtr F = Field::prime(2);
    Mat X(F, 3, 3);
    // Rows e1+e2, e2+e3, e1+e3: rank 2 over GF(2), left kernel (1,1,1).
    X.at(0, 0) = X.at(0, 1) = 1;
    X.at(1, 1) = X.at(1, 2) = 1;
    X.at(2, 0) = X.at(2, 2) = 1;
    CHECK(X.rank() == 2);
    CHECK(X.det() == 0);
    const Mat K = X.left_kernel();
    REQUIRE(K.rows() == 1);
    CHECK((K * X) == Mat(F, 1, 3));

    CHECK(Mat::identity(F, 3).det() == 1);
    CHECK(Mat::identity(F, 3).rank() == 3);
    CHECK(Mat::identity(F, 3).left_kernel().rows() == 0);

    FieldPtr G = Field::prime(7);
    Mat D = Mat::diag(G, {2, 3, 4});
    CHECK(D.det() == (2 * 3 * 4) % 7);
}

TEST_CASE("parse and render") {
    FieldPtr K = Field::make(2, 2);
    const Mat X = Mat::parse(K, "w+1,0;1,w");
    CHECK(X(0, 0) == K->add(K->gen(), 1));
    CHECK(X(1, 1) == K->gen());
    CHECK(Mat::parse(K, X.to_string()) == X);
}

TEST_CASE("char_poly of a companion matrix is the polynomial") {
    for (std::uint64_t q : {2, 3, 4}) {
        std::uint32_t p = 0, e = 0;
        factor_prime_power(q, p, e);
        FieldPtr F = Field::make(p, e);
        for (std::uint32_t d = 1; d <= 3; ++d) {
            const std::uint64_t total = u64_pow_checked(q, d, "test");
            for (std::uint64_t code = 0; code < total; ++code) {
                const Poly f = Poly::from_monic_code(F, d, code);
                CHECK(char_poly(Mat::companion(f)) == f);
            }
        }
    }
}

TEST_CASE("char_poly multiplies over block diagonals") {
    FieldPtr F = Field::prime(3);
    const Poly f = parse_poly(F, "t^2+1");
    const Poly g = parse_poly(F, "t+2");
    const Mat X = Mat::block_diag({Mat::companion(f), Mat::companion(g)});
    CHECK(char_poly(X) == f * g);
}

TEST_CASE("min_poly and lambda_partition on engineered types") {
    FieldPtr F = Field::prime(2);
    const Poly t1 = parse_poly(F, "t+1");

    // Identity: char = (t+1)^n, min = t+1, lambda = (1,...,1).
    const Mat I3 = Mat::identity(F, 3);
    CHECK(min_poly(I3) == t1);
    CHECK(lambda_partition(I3, t1) == Partition({1, 1, 1}));
    CHECK(lambda_partition(I3, Poly::t(F)) == Partition());

    // Companion of (t+1)^3: single Jordan block, lambda = (3).
    const Mat J3 = Mat::companion(t1.pow(3));
    CHECK(min_poly(J3) == t1.pow(3));
    CHECK(lambda_partition(J3, t1) == Partition({3}));

    // block_diag(companion((t+1)^2), companion(t+1)): lambda = (2,1).
    const Mat X = Mat::block_diag({Mat::companion(t1.pow(2)), Mat::companion(t1)});
    CHECK(lambda_partition(X, t1) == Partition({2, 1}));
    CHECK(min_poly(X) == t1.pow(2));
}

TEST_CASE("matrix_type lists divisors in canonical order") {
    FieldPtr F = Field::prime(2);
    const Poly t = Poly::t(F);
    const Poly f = parse_poly(F, "t^2+t+1");
    const Mat X = Mat::block_diag({Mat::companion(t.pow(2)), Mat::companion(f)});
    const std::vector<MatrixType> ty = matrix_type(X);
    REQUIRE(ty.size() == 2);
    CHECK(ty[0].h == t);
    CHECK(ty[0].lambda == Partition({2}));
    CHECK(ty[1].h == f);
    CHECK(ty[1].lambda == Partition({1}));
}

TEST_CASE("primary_components split the space") {
    FieldPtr F = Field::prime(3);
    const Poly h1 = parse_poly(F, "t+1");
    const Poly h2 = parse_poly(F, "t^2+1");
    const Mat X = Mat::block_diag({Mat::companion(h1.pow(2)), Mat::companion(h2)});
    const auto comps = primary_components(X);
    REQUIRE(comps.size() == 2);
    std::uint32_t dim = 0;
    for (const auto& pc : comps) {
        CHECK(pc.lambda.size() * std::uint32_t(pc.h.deg()) == pc.basis.rows());
        CHECK(pc.multiplicity == pc.lambda.largest());
        dim += pc.basis.rows();
    }
    CHECK(dim == 4);
}

TEST_CASE("blowup realizes the norm of the characteristic polynomial") {
    FieldPtr F = Field::prime(2);
    FieldPtr K = Field::extension_canonical(F, 2);
    const felt w = K->gen();

    Mat X(K, 1, 1);
    X.at(0, 0) = w;
    const Mat B = blowup(X);
    REQUIRE(B.rows() == 2);
    CHECK(B.field() == F);
    CHECK(char_poly(B) == parse_poly(F, "t^2+t+1"));

    // General check: char_poly(blowup X) = prod of the Galois conjugates of
    // char_poly(X), coerced to F.
    for (std::uint64_t code = 0; code < 256; code += 37) {
        const Mat Y = Mat::from_code(K, 2, code);
        Poly prod = char_poly(Y);
        prod = prod * prod.conjugate(1);
        const Poly blown = char_poly(blowup(Y));
        REQUIRE(prod.deg() == blown.deg());
        for (std::uint32_t i = 0; i <= 4; ++i) CHECK(prod.coeff(i) == blown.coeff(i));
    }

    // Over a prime field the blow-up is the identity operation.
    const Mat Z = Mat::from_code(F, 2, 9);
    CHECK(blowup(Z) == Z);
}

TEST_CASE("primary cyclic routes agree and produce witnesses") {
    FieldPtr F = Field::prime(2);
    FieldPtr K = Field::extension_canonical(F, 2);
    const Poly f = parse_poly(F, "t^2+t+1");

    // X = [w]: blowup is the companion of f, lambda single part.
    Mat X(K, 1, 1);
    X.at(0, 0) = K->gen();
    const auto vf = is_primary_cyclic_F(X, f);
    const auto vk = is_primary_cyclic_K(X, f);
    CHECK(vf.is_cyclic);
    CHECK(vk.is_cyclic);
    REQUIRE(vk.witness.has_value());
    CHECK(vk.witness->deg() == 1);

    // X = [0]: lambda(blowup, t) = (1,1), not primary cyclic for f = t.
    Mat Z(K, 1, 1);
    CHECK(!is_primary_cyclic_F(Z, Poly::t(F)).is_cyclic);
    CHECK(!is_primary_cyclic_K(Z, Poly::t(F)).is_cyclic);

    // Route agreement across a full small scan: every X in M(2, GF(4)),
    // every irreducible f of degree 2 over GF(2).
    const std::vector<Poly> fs = enum_irreducibles(F, 2);
    for (std::uint64_t code = 0; code < 256; ++code) {
        const Mat Y = Mat::from_code(K, 2, code);
        for (const Poly& g : fs)
            CHECK(is_primary_cyclic_F(Y, g).is_cyclic == is_primary_cyclic_K(Y, g).is_cyclic);
    }
}

TEST_CASE("divisor criterion rejects degrees not divisible by b") {
    FieldPtr F = Field::prime(2);
    FieldPtr K = Field::extension_canonical(F, 2);
    Mat X(K, 2, 2);
    X.at(0, 1) = 1;
    // f of degree 3 cannot certify anything when b = 2.
    const Poly f = parse_poly(F, "t^3+t+1");
    CHECK(!is_primary_cyclic_K(X, f).is_cyclic);
    CHECK(!is_primary_cyclic_F(X, f).is_cyclic);
}
