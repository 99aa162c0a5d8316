#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <tuple>
#include <unistd.h>
#include <vector>

#include <json.hpp>

#include "thue/cubic_order.hpp"
#include "thue/diophantine.hpp"
#include "thue/errors.hpp"
#include "thue/exotic_table.hpp"
#include "thue/forms.hpp"
#include "thue/interval.hpp"
#include "thue/io.hpp"
#include "thue/laws.hpp"
#include "thue/roots.hpp"
#include "thue/search.hpp"
#include "thue/units.hpp"

using namespace thue;

namespace {

mpz_class zz(long long v) { return mpz_class(static_cast<long>(v)); }

mpq_class qq(const char* s) {
    mpq_class r(s);
    r.canonicalize();
    return r;
}

order_element pow_unit(const order_element& e, long long k) {
    if (k >= 0) return e.pow(static_cast<unsigned long>(k));
    return e.invert_unit().pow(static_cast<unsigned long>(-k));
}

struct cli_result {
    int exit_code;
    std::string out;
};

/* Run the built CLI through the shell, capturing stdout. */
cli_result run_cli(const std::string& args, const std::string& env = "") {
    std::string cmd =
        env + std::string(THUE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
    int rc = pclose(p);
    return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

std::filesystem::path temp_file(const char* stem) {
    return std::filesystem::temp_directory_path() /
           (std::string(stem) + "." + std::to_string(::getpid()) + ".jsonl");
}

void sort_solutions(std::vector<solution>& v) {
    std::sort(v.begin(), v.end(), [](const solution& l, const solution& r) {
        if (l.n != r.n) return l.n < r.n;
        if (l.a != r.a) return l.a < r.a;
        if (l.y != r.y) return l.y < r.y;
        return l.x < r.x;
    });
}

}  // namespace

TEST_SUITE("cubic_order") {
    TEST_CASE("defining relation and root identities hold as elements") {
        for (long long n : {0LL, 1LL, 2LL, 5LL, 37LL}) {
            order_element l0 = order_element::lambda0(n);
            order_element l1 = order_element::lambda1(n);
            order_element l2 = order_element::lambda2(n);

            order_element cube = l0.pow(3);
            order_element reduced = l0.pow(2) * zz(n - 1) + l0 * zz(n + 2) +
                                    order_element::integer(n, 1);
            CHECK(cube == reduced);

            order_element prod = l0 * l1 * l2;
            CHECK(prod.is_one());

            /* lambda1 (lambda0 + 1) = -1 and lambda2 lambda0 = -(lambda0+1) */
            order_element one = order_element::integer(n, 1);
            order_element t = l1 * (l0 + one);
            CHECK(t == -one);
            t = l2 * l0;
            CHECK(t == -(l0 + one));
        }
    }

    TEST_CASE("norms of the fundamental units and rationals") {
        for (long long n : {0LL, 1LL, 3LL, 11LL}) {
            CHECK(order_element::lambda0(n).norm() == 1);
            CHECK(order_element::lambda1(n).norm() == 1);
            CHECK(order_element::lambda2(n).norm() == 1);
            mpz_class c(-7);
            CHECK(order_element::integer(n, c).norm() == -343);
        }
    }

    TEST_CASE("galois cycles the roots with period three") {
        std::mt19937_64 rng(41);
        std::uniform_int_distribution<long long> coef(-50, 50);
        for (long long n : {0LL, 1LL, 4LL, 9LL}) {
            order_element l0 = order_element::lambda0(n);
            CHECK(l0.galois() == order_element::lambda1(n));
            CHECK(l0.galois().galois() == order_element::lambda2(n));
            for (int i = 0; i < 25; ++i) {
                order_element e(n, zz(coef(rng)), zz(coef(rng)),
                                zz(coef(rng)));
                order_element s3 = e.galois().galois().galois();
                CHECK(s3 == e);
                CHECK(e.galois().norm() == e.norm());
            }
        }
    }

    TEST_CASE("norm is multiplicative") {
        std::mt19937_64 rng(43);
        std::uniform_int_distribution<long long> coef(-30, 30);
        for (int i = 0; i < 50; ++i) {
            long long n = i % 7;
            order_element e(n, zz(coef(rng)), zz(coef(rng)), zz(coef(rng)));
            order_element f(n, zz(coef(rng)), zz(coef(rng)), zz(coef(rng)));
            order_element ef = e * f;
            mpz_class lhs = ef.norm();
            mpz_class rhs = e.norm() * f.norm();
            CHECK(lhs == rhs);
        }
    }

    TEST_CASE("unit inversion round-trips") {
        for (long long n : {0LL, 2LL, 6LL}) {
            order_element l0 = order_element::lambda0(n);
            order_element l2 = order_element::lambda2(n);
            order_element u = l0.pow(3) * l2.invert_unit().pow(2);
            order_element r = u * u.invert_unit();
            CHECK(r.is_one());
            CHECK_THROWS_AS(
                order_element::integer(n, 2).invert_unit(), not_a_unit_error);
        }
    }

    TEST_CASE("embeddings follow the root ordering and the galois rotation") {
        for (long long n : {0LL, 1LL, 5LL}) {
            order_element l0 = order_element::lambda0(n);
            root_triple rt = isolate_roots(n, 128);
            auto emb = l0.embed(128);
            for (int i = 0; i < 3; ++i)
                CHECK(emb[i].intersects(rt.lam_interval(i, 128)));

            /* phi_i(e) = phi_0(sigma^i e): embedding slot i of e equals slot
             * 0 of the i-th galois image. */
            order_element e(n, zz(3), zz(-2), zz(1));
            auto ee = e.embed(192);
            auto e1 = e.galois().embed(192);
            auto e2 = e.galois().galois().embed(192);
            CHECK(ee[1].intersects(e1[0]));
            CHECK(ee[2].intersects(e2[0]));
        }
    }
}

TEST_SUITE("forms") {
    TEST_CASE("seed coefficients") {
        for (long long n : {0LL, 1LL, 2LL, 10LL, 41LL}) {
            form_coeffs c0 = coeffs(n, 0);
            CHECK(c0.u == 3);
            CHECK(c0.v == 3);
            form_coeffs c1 = coeffs(n, 1);
            CHECK(c1.u == zz(n - 1));
            CHECK(c1.v == zz(n + 2));
            form_coeffs c2 = coeffs(n, 2);
            CHECK(c2.u == zz(n * n + 5));
            CHECK(c2.v == zz(n * n + 2 * n + 6));
        }
    }

    TEST_CASE("n = 0 coefficient run") {
        long us[] = {3, -1, 5, -4, 13, -16};
        long vs[] = {3, 2, 6, 11, 26, 57};
        for (int a = 0; a <= 5; ++a) {
            form_coeffs c = coeffs(0, a);
            CHECK(c.u == us[a]);
            CHECK(c.v == vs[a]);
        }
    }

    TEST_CASE("recurrence agrees with the companion-matrix traces") {
        for (long long n : {0LL, 1LL, 2LL, 7LL, 23LL, 50LL})
            for (long long a = 0; a <= 60; ++a) {
                form_coeffs r = coeffs(n, a);
                form_coeffs o = coeffs_oracle(n, a);
                CHECK(r.u == o.u);
                CHECK(r.v == o.v);
            }
    }

    TEST_CASE("form value is the norm of x - lambda0^a y") {
        std::mt19937_64 rng(47);
        std::uniform_int_distribution<long long> pick(-25, 25);
        for (long long n : {0LL, 1LL, 3LL, 8LL})
            for (long long a = 1; a <= 6; ++a) {
                order_element la =
                    order_element::lambda0(n).pow(static_cast<unsigned long>(a));
                for (int i = 0; i < 20; ++i) {
                    mpz_class x = zz(pick(rng)), y = zz(pick(rng));
                    order_element g =
                        order_element::integer(n, x) - la * y;
                    mpz_class lhs = eval_form(n, a, x, y);
                    mpz_class rhs = g.norm();
                    CHECK(lhs == rhs);
                }
            }
    }

    TEST_CASE("symmetries") {
        std::mt19937_64 rng(53);
        std::uniform_int_distribution<long long> pick(-40, 40);
        for (int i = 0; i < 60; ++i) {
            long long n = i % 9, a = 1 + i % 7;
            mpz_class x = zz(pick(rng)), y = zz(pick(rng));
            mpz_class base = eval_form(n, a, x, y);
            for (symmetry s :
                 {symmetry::negate, symmetry::flip_n, symmetry::flip_a}) {
                sym_image im = symmetry_image(n, a, x, y, s);
                mpz_class image = eval_form(im.n, im.a, im.x, im.y, true);
                mpz_class expect = im.sign * base;
                CHECK(image == expect);
            }
            /* homogeneity */
            mpz_class scaled = eval_form(n, a, 3 * x, 3 * y);
            mpz_class cube = 27 * base;
            CHECK(scaled == cube);
        }
    }

    TEST_CASE("negative a reflects, a = 0 is fenced") {
        mpz_class v1 = eval_form(4, -3, 5, 2);
        mpz_class v2 = eval_form(4, 3, 2, 5);
        CHECK(v1 == -v2);
        CHECK_THROWS_AS(eval_form(4, 0, 5, 2), degenerate_form_error);
        mpz_class d = eval_form(4, 0, 5, 2, true);
        CHECK(d == 27);
        CHECK_THROWS_AS(coeffs(3, -1), argument_error);
    }
}

TEST_SUITE("roots") {
    TEST_CASE("brackets isolate with certified signs and ordering") {
        for (long long n : {0LL, 1LL, 2LL, 3LL, 100LL}) {
            root_triple rt = isolate_roots(n, 128);
            interval l0 = rt.lam_interval(0, 128);
            interval l1 = rt.lam_interval(1, 128);
            interval l2 = rt.lam_interval(2, 128);
            CHECK(l0.is_strictly_positive());
            CHECK(l1.is_strictly_negative());
            CHECK(l1.strictly_greater(mpq_class(-1)));
            CHECK(l2.strictly_less(mpq_class(-1)));
            CHECK(l0.strictly_greater(mpq_class(1)));
            for (int i = 0; i < 3; ++i) {
                const root_bracket& b = rt.lam[i];
                CHECK(sign_f_at(n, b.lo) == b.sign_lo);
                CHECK(sign_f_at(n, b.hi) == -b.sign_lo);
            }
        }
    }

    TEST_CASE("doubling the precision at least halves the widths") {
        for (long long n : {0LL, 1LL, 17LL, 512LL, 10000LL}) {
            root_triple narrow = isolate_roots(n, 96);
            root_triple wide = isolate_roots(n, 192);
            for (int i = 0; i < 3; ++i) {
                mpq_class w = narrow.lam[i].width() / 2;
                CHECK(wide.lam[i].width() <= w);
            }
        }
    }

    TEST_CASE("published four-decimal enclosures at n = 1") {
        root_triple rt = isolate_roots(1, 128);
        auto inside = [&](int i, const char* lo, const char* hi) {
            interval iv = rt.lam_interval(i, 128);
            CHECK(iv.strictly_greater(qq(lo)));
            CHECK(iv.strictly_less(qq(hi)));
        };
        inside(0, "18793/10000", "18794/10000");
        inside(1, "-3473/10000", "-3472/10000");
        inside(2, "-15321/10000", "-15320/10000");
    }

    TEST_CASE("bracket display holds for n >= 3 and fails where it fails") {
        for (long long n : {3LL, 4LL, 10LL, 1000LL}) {
            bound_report r = check_root_bounds(n);
            CHECK(r.asserted);
            CHECK(r.all_hold());
        }
        /* The middle lower bound n + 2/(n+1) < lambda0 is genuinely false
         * for n = 1 and n = 2: f_n is positive there, e.g. f_2(8/3) > 0. */
        CHECK(sign_f_at(2, mpq_class(8, 3)) > 0);
        CHECK(sign_f_at(1, mpq_class(2, 1)) > 0);
        for (long long n : {1LL, 2LL}) {
            bound_report r = check_root_bounds(n);
            CHECK_FALSE(r.asserted);
            CHECK_FALSE(r.all_hold());
            bool middle_false = false;
            for (const auto& c : r.checks)
                if (c.name.find("< lambda0") != std::string::npos &&
                    !c.holds)
                    middle_false = true;
            CHECK(middle_false);
        }
    }

    TEST_CASE("compare_to_root brackets rationals correctly") {
        /* lambda0(5) ~ 5.354, lambda1(5) ~ -0.157, lambda2(5) ~ -1.187 */
        CHECK(compare_to_root(5, 0, qq("53/10")) < 0);
        CHECK(compare_to_root(5, 0, qq("54/10")) > 0);
        CHECK(compare_to_root(5, 1, qq("-1/10")) > 0);
        CHECK(compare_to_root(5, 1, qq("-2/10")) < 0);
        CHECK(compare_to_root(5, 2, qq("-11/10")) > 0);
        CHECK(compare_to_root(5, 2, qq("-13/10")) < 0);
    }
}

TEST_SUITE("diophantine") {
    TEST_CASE("convergents of a rational terminate at the value") {
        std::vector<convergent> cs =
            convergents_of_rational(mpq_class(355, 113), 10);
        REQUIRE(cs.size() >= 3);
        CHECK(cs[0].p == 3);
        CHECK(cs[0].q == 1);
        CHECK(cs[1].p == 22);
        CHECK(cs[1].q == 7);
        mpq_class last(cs.back().p, cs.back().q);
        last.canonicalize();
        CHECK(last == mpq_class(355, 113));
    }

    TEST_CASE("convergents of lambda0 obey the quality bound") {
        for (long long n : {1LL, 4LL}) {
            refinable_real alpha = [n](mpfr_prec_t prec) {
                return isolate_roots(n, prec).lam_interval(0, prec);
            };
            std::vector<convergent> cs = convergents(alpha, 12);
            REQUIRE(cs.size() == 12);
            interval a256 = alpha(256);
            for (size_t i = 1; i < cs.size(); ++i) {
                /* strict from the third convergent; q1 = q0 = 1 happens */
                if (i >= 2) CHECK(cs[i].q > cs[i - 1].q);
                CHECK(cs[i].q >= cs[i - 1].q);
                /* |alpha - p/q| < 1/q^2 */
                mpq_class frac(cs[i].p, cs[i].q);
                frac.canonicalize();
                interval diff =
                    (a256 - interval::of_rational(frac, 256)).abs();
                mpq_class quality(mpz_class(1),
                                  mpz_class(cs[i].q * cs[i].q));
                CHECK(diff.strictly_less(quality));
            }
        }
    }

    TEST_CASE("witnesses satisfy their certificates") {
        for (long long n : {0LL, 2LL, 6LL})
            for (long long a : {1LL, 3LL}) {
                auto ws = small_value_witnesses(n, a, 4);
                REQUIRE(ws.size() == 4);
                mpz_class base = zz(n + 4), powa;
                mpz_pow_ui(powa.get_mpz_t(), base.get_mpz_t(),
                           static_cast<unsigned long>(a));
                mpz_class last_y(0);
                for (const auto& w : ws) {
                    CHECK(w.y > last_y);
                    last_y = w.y;
                    mpz_class val = eval_form(n, a, w.x, w.y);
                    CHECK(val == w.value);
                    mpz_class bound = w.y * powa;
                    CHECK(bound == w.bound);
                    mpz_class av = abs(val);
                    CHECK(av <= bound);
                    if (w.y_condition_met)
                        CHECK(w.refined == refined_verdict::holds);
                }
            }
    }

    TEST_CASE("witness computation is deterministic") {
        auto w1 = small_value_witnesses(3, 2, 5);
        auto w2 = small_value_witnesses(3, 2, 5);
        REQUIRE(w1.size() == w2.size());
        for (size_t i = 0; i < w1.size(); ++i) {
            CHECK(w1[i].x == w2[i].x);
            CHECK(w1[i].y == w2[i].y);
        }
    }
}

TEST_SUITE("search") {
    TEST_CASE("classification") {
        CHECK(classify(0, 1, zz(1), zz(0), zz(1)) == solution_class::trivial);
        CHECK(classify(0, 1, zz(0), zz(1), zz(-1)) == solution_class::trivial);
        CHECK(classify(3, 1, zz(-1), zz(1), zz(1)) ==
              solution_class::unit_pm);
        CHECK(classify(2, 5, zz(4), zz(4), zz(-704)) ==
              solution_class::diagonal);
        CHECK(classify(4, 2, zz(3), zz(2), zz(1)) == solution_class::exotic);
    }

    TEST_CASE("canonical representative has value +1") {
        solution s;
        s.n = 0;
        s.a = 5;
        s.x = zz(-19);
        s.y = zz(1);
        s.value = zz(-1);
        auto [cx, cy] = canonical_rep(s);
        CHECK(cx == 19);
        CHECK(cy == -1);
        mpz_class v = eval_form(0, 5, cx, cy);
        CHECK(v == 1);
    }

    TEST_CASE("proximity search equals brute force") {
        for (long long n = 0; n <= 2; ++n)
            for (long long a = 1; a <= 3; ++a)
                for (long long m : {1LL, 10LL}) {
                    auto fast =
                        search_proximity(n, a, zz(m), 30, zz(30));
                    auto slow =
                        search_naive(n, a, zz(m), -30, 30, 0, 30);
                    sort_solutions(fast);
                    sort_solutions(slow);
                    REQUIRE(fast.size() == slow.size());
                    for (size_t i = 0; i < fast.size(); ++i)
                        CHECK(fast[i] == slow[i]);
                }
    }

    TEST_CASE("thread count does not change the result") {
        search_config c;
        c.n_min = 0;
        c.n_max = 3;
        c.a_min = 1;
        c.a_max = 6;
        c.m = 2;
        c.y_max = 60;
        c.x_abs_max = zz(60);
        c.threads = 1;
        auto one = run_search(c);
        c.threads = 4;
        auto four = run_search(c);
        REQUIRE(one.size() == four.size());
        for (size_t i = 0; i < one.size(); ++i) CHECK(one[i] == four[i]);
    }

    TEST_CASE("checkpoint resume and corrupt-tail recovery") {
        auto path = temp_file("thue-ck");
        std::filesystem::remove(path);

        search_config c;
        c.n_min = 0;
        c.n_max = 2;
        c.a_min = 1;
        c.a_max = 8;
        c.y_max = 120;
        c.x_abs_max = zz(120);
        c.checkpoint_path = path.string();
        auto full = run_search(c);

        /* Drop the summary line and half the records, then mangle the new
         * tail; the resumed run must still match. */
        std::ifstream in(path);
        std::vector<std::string> lines;
        for (std::string l; std::getline(in, l);) lines.push_back(l);
        in.close();
        REQUIRE(lines.size() > 4);
        std::ofstream out(path, std::ios::trunc);
        for (size_t i = 0; i + 1 < lines.size() / 2; ++i)
            out << lines[i] << "\n";
        out << R"({"n":2,"a":7,"m":"1","solut)";  /* torn write */
        out.close();

        auto resumed = run_search(c);
        REQUIRE(full.size() == resumed.size());
        for (size_t i = 0; i < full.size(); ++i) CHECK(full[i] == resumed[i]);

        /* A checkpoint written for another m is ignored, not misused. */
        c.m = 3;
        auto other = run_search(c);
        c.checkpoint_path.reset();
        auto fresh = run_search(c);
        REQUIRE(other.size() == fresh.size());
        for (size_t i = 0; i < other.size(); ++i) CHECK(other[i] == fresh[i]);
        std::filesystem::remove(path);
    }

    TEST_CASE("small table region reproduces expectations") {
        search_config c = default_table_config();
        c.n_max = 4;
        c.a_max = 10;
        c.y_max = 200;
        c.x_abs_max = zz(200);
        table_report r = reproduce_table(c);
        CHECK(r.clean());
        CHECK(r.exotic_total == 27);
    }

    TEST_CASE("data file mirrors the embedded table") {
        std::ifstream f(std::string(THUE_DATA_DIR) +
                        "/exotic_solutions.json");
        REQUIRE(f.good());
        auto rows = load_exotic_rows(f);
        const auto& expect = expected_exotic_rows();
        REQUIRE(rows.size() == expect.size());
        for (size_t i = 0; i < rows.size(); ++i) {
            CHECK(rows[i].n == expect[i].n);
            CHECK(rows[i].a == expect[i].a);
            CHECK(rows[i].entries == expect[i].entries);
        }
    }
}

TEST_SUITE("units") {
    TEST_CASE("gamma triple multiplies back to the form value") {
        std::mt19937_64 rng(59);
        std::uniform_int_distribution<long long> pick(-60, 60);
        int done = 0;
        while (done < 40) {
            long long n = done % 6, a = 1 + done % 5;
            mpz_class x = zz(pick(rng)), y = zz(pick(rng));
            if (x == 0 && y == 0) continue;
            mpz_class v = eval_form(n, a, x, y);
            if (v == 0) continue;
            gamma_triple g = make_gamma_triple(n, a, x, y);
            order_element prod = g.gamma[0] * g.gamma[1] * g.gamma[2];
            CHECK(prod == order_element::integer(n, v));
            mpz_class av = abs(v);
            CHECK(g.m == av);
            ++done;
        }
    }

    TEST_CASE("i0 really is a minimal embedding") {
        for (auto [n, a, x, y] :
             std::vector<std::array<long long, 4>>{{0, 1, -9, 5},
                                                   {0, 2, 13, 4},
                                                   {1, 2, 7, 3},
                                                   {3, 1, -2, 9},
                                                   {4, 2, 3, 2},
                                                   {2, 3, 40, 17}}) {
            gamma_triple g = make_gamma_triple(n, a, zz(x), zz(y));
            auto e0 = g.gamma[0].embed(256);
            std::array<interval, 3> mags = {
                e0[0].abs(), e0[1].abs(), e0[2].abs()};
            for (int j = 0; j < 3; ++j)
                CHECK_FALSE(mags[j].strictly_less(mags[g.i0]));
        }
    }

    TEST_CASE("siegel identity vanishes exactly") {
        std::mt19937_64 rng(61);
        std::uniform_int_distribution<long long> pick(-100, 100);
        int done = 0;
        while (done < 200) {
            long long n = done % 21, a = 1 + done % 10;
            mpz_class x = zz(pick(rng)), y = zz(pick(rng));
            if (x == 0 && y == 0) continue;
            if (eval_form(n, a, x, y) == 0) continue;
            CHECK(siegel_check(make_gamma_triple(n, a, x, y)));
            ++done;
        }
    }

    TEST_CASE("pure units decompose to themselves") {
        /* (x, y) = (0, 1): gamma0 = -lambda0^a, so A = a, B = 0, delta = -1 */
        for (long long n : {0LL, 3LL})
            for (long long a : {1LL, 4LL}) {
                gamma_triple g = make_gamma_triple(n, a, zz(0), zz(1));
                unit_decomposition d = decompose(g);
                CHECK(d.delta_is_pm_one);
                CHECK(d.A == a);
                CHECK(d.B == 0);
                CHECK(d.delta == order_element::integer(n, -1));
            }
    }

    TEST_CASE("table solutions decompose with delta = +-1") {
        for (auto [n, a, x, y] : std::vector<std::array<long long, 4>>{
                 {0, 1, -9, 5}, {0, 2, -14, -9}, {0, 3, 2, 1},
                 {0, 5, -3, -1}, {1, 1, -3, 2},  {1, 2, 7, 3},
                 {2, 2, -7, -1}, {3, 1, 9, -7},  {4, 2, 3, 2}}) {
            gamma_triple g = make_gamma_triple(n, a, zz(x), zz(y));
            unit_decomposition d = decompose(g);
            CHECK(d.delta_is_pm_one);
            order_element back = d.delta *
                                 pow_unit(order_element::lambda0(n), d.A) *
                                 pow_unit(order_element::lambda2(n), d.B);
            CHECK(back == g.gamma[0]);
            if (n >= 3) {
                CHECK(d.conjugate_bounds_checked);
                for (auto v : d.conjugate_bounds)
                    CHECK(v == refined_verdict::holds);
            }
        }
    }

    TEST_CASE("frozen decomposition of the n = 4 sporadic solution") {
        gamma_triple g = make_gamma_triple(4, 2, zz(3), zz(2));
        unit_decomposition d = decompose(g);
        CHECK(d.A == 2);
        CHECK(d.B == 3);
        CHECK(d.delta.is_one());
    }

    TEST_CASE("exponent transfer table and its growth bound") {
        /* {A', B'} for (A, B) = (1, 0) and (0, 1) per minimal index */
        using P = std::pair<long long, long long>;
        CHECK(ab_prime(0, 1, 0) == P(-1, -2));
        CHECK(ab_prime(0, 0, 1) == P(2, 1));
        CHECK(ab_prime(1, 1, 0) == P(-1, 1));
        CHECK(ab_prime(1, 0, 1) == P(-1, -2));
        CHECK(ab_prime(2, 1, 0) == P(2, 1));
        CHECK(ab_prime(2, 0, 1) == P(-1, 1));
        std::mt19937_64 rng(67);
        std::uniform_int_distribution<long long> pick(-40, 40);
        for (int i = 0; i < 100; ++i) {
            long long A = pick(rng), B = pick(rng);
            for (int i0 = 0; i0 < 3; ++i0) {
                auto [Ap, Bp] = ab_prime(i0, A, B);
                long long lhs = std::abs(Ap) + std::abs(Bp);
                long long rhs = 3 * (std::abs(A) + std::abs(B));
                CHECK(lhs <= rhs);
            }
        }
    }

    TEST_CASE("regulator system recovers unit exponents") {
        for (long long n : {0LL, 1LL, 5LL}) {
            /* gamma = lambda0^3 lambda2^-2 has log|gamma_i| =
             * 3 L_i - 2 l_i with m = 1, so A_real, B_real must enclose
             * (3, -2). */
            order_element u = pow_unit(order_element::lambda0(n), 3) *
                              pow_unit(order_element::lambda2(n), -2);
            auto emb = u.embed(256);
            interval c0 = emb[0].abs().log_abs();
            interval c1 = emb[1].abs().log_abs();
            regulator_solution rs = regulator_system(n, c0, c1);
            CHECK(rs.A_real.contains(mpq_class(3)));
            CHECK(rs.B_real.contains(mpq_class(-2)));
            CHECK(rs.R.is_strictly_positive());
        }
    }

    TEST_CASE("linear-form diagnostics certify the key inequality") {
        for (auto [n, a, x, y] : std::vector<std::array<long long, 4>>{
                 {0, 1, -9, 5}, {1, 2, 7, 3}, {4, 2, 3, 2}, {3, 1, -2, 9}}) {
            gamma_triple g = make_gamma_triple(n, a, zz(x), zz(y));
            unit_decomposition d = decompose(g);
            lambda_report lr = lambda_diagnostics(g, d);
            CHECK_FALSE(lr.ratio_minus_one.contains_zero());
            CHECK(lr.siegel_rearrangement_consistent);
            CHECK(lr.lambda_matches_log_ratio);
            CHECK(lr.mu_consistent);
            CHECK(lr.h_mu_within_bound == refined_verdict::holds);
            auto [Ap, Bp] = ab_prime(g.i0, d.A, d.B);
            CHECK(lr.A_prime == Ap);
            CHECK(lr.B_prime == Bp);
        }
    }
}

TEST_SUITE("laws") {
    TEST_CASE("recurrence inequalities: exact exception accounting") {
        law_report r = verify_recurrence_inequalities(100, 100);
        CHECK(r.clean());
        using T = std::tuple<std::string, long long, long long>;
        std::vector<T> got;
        for (const auto& v : r.violations) got.emplace_back(v.law, v.n, v.a);
        std::sort(got.begin(), got.end());
        std::vector<T> want = {
            {"alternating-u", 0, 2}, {"doubled-u", 1, 3},
            {"u-positive", 1, 1},    {"v-doubling", 0, 1},
            {"v-doubling", 0, 3},    {"v-doubling", 1, 1},
            {"v-doubling", 2, 1},    {"v-doubling", 3, 1},
            {"v-doubling", 4, 1},    {"v-gap", 1, 2},
        };
        CHECK(got == want);
    }

    TEST_CASE("exception set is stable under grid enlargement") {
        law_report base = verify_recurrence_inequalities(100, 100);
        law_report big = verify_recurrence_inequalities(200, 200);
        CHECK(big.clean());
        CHECK(base.violations.size() == big.violations.size());
    }

    TEST_CASE("plus-minus-one inputs match the three families") {
        pm_one_report r = verify_pm_one_inputs(50, 50);
        CHECK(r.clean());
        /* 2 cases per n from F_{n,1}(-c, c) = c, plus 4 extra at n = 0 */
        CHECK(r.found.size() == 2 * 51 + 4);
        pm_one_case probe{17, 1, -1, 1, 1};
        bool seen = false;
        for (const auto& c : r.found)
            if (c == probe) seen = true;
        CHECK(seen);
    }

    TEST_CASE("diagonal growth bounds are violation-free") {
        auto v = verify_diagonal_bounds(30, 20, 10);
        CHECK(v.empty());
    }
}

TEST_SUITE("io") {
    TEST_CASE("big integers serialize as exact decimal strings") {
        solution s;
        s.n = 2;
        s.a = 64;
        s.x = mpz_class("123456789012345678901234567890");
        s.y = zz(-7);
        s.value = eval_form(2, 64, s.x, s.y);
        s.cls = classify(2, 64, s.x, s.y, s.value);
        auto j = to_json(s);
        CHECK(j["x"].get<std::string>() ==
              "123456789012345678901234567890");
        mpz_class back(j["value"].get<std::string>());
        CHECK(back == s.value);
    }

    TEST_CASE("format parsing") {
        CHECK(parse_format("jsonl") == output_format::jsonl);
        CHECK(parse_format("csv") == output_format::csv);
        CHECK(parse_format("pretty") == output_format::pretty);
        CHECK_THROWS_AS(parse_format("xml"), argument_error);
    }
}

TEST_SUITE("cli") {
    TEST_CASE("documented examples") {
        cli_result r = run_cli("coeffs --n 0 --a 5 --format jsonl");
        CHECK(r.exit_code == 0);
        CHECK(r.out == "{\"n\":0,\"a\":5,\"u\":\"-16\",\"v\":\"57\"}\n");

        r = run_cli("eval --n 4 --a 2 --x 3 --y 2 --format jsonl");
        CHECK(r.exit_code == 0);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j["value"] == "1");
        CHECK(j["class"] == "exotic");
    }

    TEST_CASE("jsonl output is one json object per line") {
        cli_result r = run_cli("witness --n 2 --a 2 --count 4 --format jsonl");
        CHECK(r.exit_code == 0);
        std::istringstream in(r.out);
        int lines = 0;
        for (std::string l; std::getline(in, l); ++lines) {
            auto j = nlohmann::json::parse(l);
            CHECK(j.is_object());
            CHECK(j.contains("x"));
            CHECK(j.contains("refined"));
        }
        CHECK(lines == 4);
    }

    TEST_CASE("exit codes") {
        CHECK(run_cli("eval --n 1 --a 0 --x 2 --y 1").exit_code == 2);
        CHECK(run_cli("eval --n 1 --a 2 --x zebra --y 1").exit_code == 2);
        CHECK(run_cli("nonsense").exit_code == 2);
        CHECK(run_cli("roots --n 2 --format csv").exit_code == 2);
        CHECK(run_cli("siegel --n 3 --a 2 --x 5 --y 4 --format jsonl")
                  .exit_code == 0);
        CHECK(run_cli("table --n-max 2 --a-max 6 --y-max 40 --format jsonl")
                  .exit_code == 0);
        CHECK(run_cli("verify --suite recurrence --n-max 10 --a-max 10 "
                      "--format jsonl")
                  .exit_code == 0);
    }

    TEST_CASE("a wrong expected table produces a diff and exit 3") {
        auto path = temp_file("thue-expected");
        {
            std::ofstream f(path);
            f << R"({"rows":[{"n":1,"a":4,"solutions":[[5,3]]}]})";
        }
        cli_result r = run_cli("table --n-max 2 --a-max 6 --y-max 40 "
                               "--expected " +
                               path.string() + " --format jsonl");
        CHECK(r.exit_code == 3);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j["clean"] == false);
        CHECK(j["diffs"].size() > 0);
        std::filesystem::remove(path);
    }

    TEST_CASE("thread env variable is honored") {
        cli_result r =
            run_cli("table --n-max 2 --a-max 6 --y-max 40 --format jsonl",
                    "THUE_FAMILY_THREADS=3 ");
        CHECK(r.exit_code == 0);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j["clean"] == true);
    }

    TEST_CASE("decompose reports a full chain") {
        cli_result r =
            run_cli("decompose --n 0 --a 2 --x 13 --y 4 --format jsonl");
        CHECK(r.exit_code == 0);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j["decomposition"]["delta_is_pm_one"] == true);
        CHECK(j["linear_form"]["ratio_inequality"] == "holds");
    }
}
