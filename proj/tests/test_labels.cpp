#include <doctest.h>

#include "weil/labels.hpp"

using namespace weil;

TEST_CASE("base-26 codec") {
    CHECK(decode_base26("a") == 0);
    CHECK(decode_base26("b") == 1);
    CHECK(decode_base26("z") == 25);
    CHECK(decode_base26("ba") == 26);
    CHECK(decode_base26("bw") == 48);
    CHECK(decode_base26("ca") == 52);
    CHECK(decode_base26("ac") == -2);
    CHECK(decode_base26("ay") == -24);
    CHECK(decode_base26("ae") == -4);
    CHECK(decode_base26("aba") == -26);

    for (long v : {0L, 1L, -1L, 25L, 26L, -26L, 48L, -48L, 675L, -676L, 17576L})
        CHECK(decode_base26(encode_base26(Integer(v))) == v);

    CHECK_THROWS_AS(decode_base26("A"), validation_error);
    CHECK_THROWS_AS(decode_base26(""), validation_error);
}

TEST_CASE("label decoding") {
    auto P = decode_label("3.2.ac_b_a");
    CHECK(P.g == 3);
    CHECK(P.q == 2);
    CHECK(P.p == 2);
    CHECK(P.coeffs == std::vector<Integer>{1, -2, 1, 0, 2, -8, 8});

    auto P1 = decode_label("1.2.a");
    CHECK(P1.coeffs == std::vector<Integer>{1, 0, 2});

    auto P4 = decode_label("4.3.ae_k_ay_bw");
    CHECK(P4.coeffs == std::vector<Integer>{1, -4, 10, -24, 48, -72, 90, -108, 81});

    CHECK_THROWS_AS(decode_label("junk"), validation_error);
    CHECK_THROWS_AS(decode_label("2.6.a_a"), validation_error);   // q not a prime power
    CHECK_THROWS_AS(decode_label("3.2.ac_b"), validation_error);  // wrong count
}

TEST_CASE("round trip over the tabulated example labels") {
    for (const char* lbl :
         {"3.2.ac_b_a", "4.3.ae_k_ay_bw", "4.4.ab_af_a_bc", "4.2.ac_b_c_ag", "4.2.ac_b_ac_f",
          "4.2.ad_c_g_ap", "4.3.ab_a_g_ag", "4.2.ad_e_ag_k", "4.4.ae_k_ay_ca", "4.2.ac_a_e_ag",
          "5.2.ae_g_ae_b_a", "5.2.ac_b_a_a_a", "5.2.a_ac_ae_c_m"}) {
        CHECK(encode_label(decode_label(lbl)) == lbl);
    }
}
