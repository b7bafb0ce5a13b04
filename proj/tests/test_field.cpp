#include <doctest.h>

#include "pcc/field.hpp"

using namespace pcc;

TEST_CASE("prime field arithmetic") {
    FieldPtr F = Field::prime(5);
    CHECK(F->order() == 5);
    CHECK(F->characteristic() == 5);
    CHECK(F->degree() == 1);
    CHECK(F->is_prime_field());
    CHECK(F->add(3, 4) == 2);
    CHECK(F->sub(1, 3) == 3);
    CHECK(F->neg(2) == 3);
    CHECK(F->mul(3, 4) == 2);
    CHECK(F->pow(2, 4) == 1);
    for (felt a = 1; a < 5; ++a) CHECK(F->mul(a, F->inv(a)) == 1);
}

TEST_CASE("prime field rejects composite characteristic") {
    CHECK_THROWS_AS(Field::prime(6), ValidationError);
    CHECK_THROWS_AS(Field::prime(1), ValidationError);
}

TEST_CASE("canonical extension GF(4)") {
    FieldPtr F = Field::make(2, 2);
    CHECK(F->order() == 4);
    CHECK(F->degree() == 2);
    CHECK(!F->is_prime_field());
    CHECK(F->base()->order() == 2);
    // Modulus t^2 + t + 1, the only irreducible quadratic over GF(2).
    CHECK(F->modulus() == std::vector<felt>{1, 1, 1});
    const felt w = F->gen();
    CHECK(w == 2);
    CHECK(F->mul(w, w) == F->add(w, 1));  // w^2 = w + 1
    CHECK(F->pow(w, 3) == 1);
    CHECK(F->elem_order(w) == 3);
    for (felt a = 1; a < 4; ++a) CHECK(F->mul(a, F->inv(a)) == 1);
}

TEST_CASE("base field embeds as identity on codes") {
    FieldPtr F = Field::prime(3);
    FieldPtr K = Field::extension_canonical(F, 2);
    CHECK(K->order() == 9);
    for (felt a = 0; a < 3; ++a)
        for (felt b = 0; b < 3; ++b) {
            CHECK(K->add(a, b) == F->add(a, b));
            CHECK(K->mul(a, b) == F->mul(a, b));
        }
}

TEST_CASE("coords round-trip and generator basis") {
    FieldPtr K = Field::make(2, 3);
    CHECK(K->order() == 8);
    for (felt a = 0; a < 8; ++a) {
        const std::vector<felt> co = K->coords(a);
        CHECK(co.size() == 3);
        CHECK(K->from_coords(co) == a);
    }
    // coords are taken in the basis {1, g, g^2}.
    const felt g = K->gen();
    const felt x = K->add(K->mul(g, g), 1);
    CHECK(K->coords(x) == std::vector<felt>{1, 0, 1});
}

TEST_CASE("frobenius fixes the base field and has the right order") {
    FieldPtr K = Field::make(3, 2);
    for (felt a = 0; a < 3; ++a) CHECK(K->frobenius(a, 1) == a);
    for (felt a = 0; a < 9; ++a) {
        CHECK(K->frobenius(a, 1) == K->pow(a, 3));
        CHECK(K->frobenius(a, 2) == a);
    }
}

TEST_CASE("elem_degree splits elements by subfield") {
    FieldPtr K = Field::make(2, 2);
    CHECK(K->elem_degree(0) == 1);
    CHECK(K->elem_degree(1) == 1);
    CHECK(K->elem_degree(K->gen()) == 2);
}

TEST_CASE("primitive element generates the multiplicative group") {
    for (auto [p, e] : {std::pair{2u, 4u}, {3u, 2u}, {5u, 2u}, {7u, 1u}}) {
        FieldPtr K = Field::make(p, e);
        CHECK(K->elem_order(K->primitive_element()) == K->order() - 1);
    }
}

TEST_CASE("extension rejects a reducible modulus") {
    FieldPtr F = Field::prime(2);
    // t^2 + 1 = (t+1)^2 over GF(2).
    CHECK_THROWS_AS(Field::extension(F, std::vector<felt>{1, 0, 1}), ValidationError);
}

TEST_CASE("tower: extension of an extension") {
    FieldPtr F4 = Field::make(2, 2);
    FieldPtr K = Field::extension_canonical(F4, 2);
    CHECK(K->order() == 16);
    CHECK(K->degree() == 2);
    CHECK(K->degree_absolute() == 4);
    CHECK(K->base_order() == 4);
    for (felt a = 1; a < 16; ++a) CHECK(K->mul(a, K->inv(a)) == 1);
    // Frobenius over GF(4) is x -> x^4.
    for (felt a = 0; a < 16; ++a) CHECK(K->frobenius(a, 1) == K->pow(a, 4));
}

TEST_CASE("key_string separates isomorphic presentations") {
    FieldPtr A = Field::make(2, 2);
    FieldPtr B = Field::extension(Field::prime(2), std::vector<felt>{1, 1, 1});
    CHECK(A->key_string() == B->key_string());
    CHECK(A->key_string() != Field::prime(2)->key_string());
}

TEST_CASE("prime_factors") {
    CHECK(prime_factors(1).empty());
    CHECK(prime_factors(12) == std::vector<std::uint64_t>{2, 3});
    CHECK(prime_factors(97) == std::vector<std::uint64_t>{97});
    CHECK(prime_factors(255) == std::vector<std::uint64_t>{3, 5, 17});
}

TEST_CASE("factor_prime_power") {
    std::uint32_t p = 0, e = 0;
    factor_prime_power(2, p, e);
    CHECK(p == 2);
    CHECK(e == 1);
    factor_prime_power(9, p, e);
    CHECK(p == 3);
    CHECK(e == 2);
    factor_prime_power(32, p, e);
    CHECK(p == 2);
    CHECK(e == 5);
    CHECK_THROWS_AS(factor_prime_power(6, p, e), ValidationError);
    CHECK_THROWS_AS(factor_prime_power(1, p, e), ValidationError);
    CHECK_THROWS_AS(factor_prime_power(0, p, e), ValidationError);
}
