#include <abelcoh/abelcoh.h>

#include <doctest.h>

#include <cstring>
#include <string>
#include <vector>

TEST_CASE("session lifecycle and run") {
    abelcoh_session* s = nullptr;
    REQUIRE(abelcoh_session_create(&s) == ABELCOH_OK);
    CHECK(abelcoh_session_set_workers(s, 2) == ABELCOH_OK);
    CHECK(abelcoh_session_set_workers(s, 0) == ABELCOH_INVALID_ARGUMENT);
    CHECK(std::strlen(abelcoh_last_error()) > 0);
    CHECK(abelcoh_session_set_seed(s, 42) == ABELCOH_OK);
    CHECK(abelcoh_session_set_caps(s, 8, 3) == ABELCOH_OK);
    CHECK(abelcoh_session_set_caps(s, 0, 3) == ABELCOH_INVALID_ARGUMENT);

    abelcoh_request req{};
    req.command = "ideals";
    req.rank = 2;
    req.format = ABELCOH_FORMAT_CSV;
    abelcoh_report* rep = nullptr;
    REQUIRE(abelcoh_run(s, &req, &rep) == ABELCOH_OK);
    CHECK(std::string(abelcoh_report_text(rep)) == "dimension,count\n0,1\n1,1\n2,1\n3,1\n");
    CHECK(abelcoh_report_passed(rep) == 1);
    CHECK(abelcoh_report_exit_code(rep) == 0);
    abelcoh_report_destroy(rep);

    req.command = "betti";
    req.rank = 5;
    CHECK(abelcoh_run(s, &req, &rep) == ABELCOH_CAP_EXCEEDED);
    CHECK(rep == nullptr);
    CHECK(std::string(abelcoh_last_error()).find("cap") != std::string::npos);
    req.rank = 0;
    CHECK(abelcoh_run(s, &req, &rep) == ABELCOH_INVALID_ARGUMENT);
    CHECK(abelcoh_run(s, nullptr, &rep) == ABELCOH_INVALID_ARGUMENT);
    abelcoh_session_destroy(s);
    abelcoh_session_destroy(nullptr);
    abelcoh_report_destroy(nullptr);
}

TEST_CASE("polynomials through the C API") {
    int64_t buf[32];
    size_t len = 32;
    REQUIRE(abelcoh_weyl_poincare(2, buf, &len) == ABELCOH_OK);
    CHECK(std::vector<int64_t>(buf, buf + len) == std::vector<int64_t>{1, 2, 2, 2, 1});
    len = 32;
    REQUIRE(abelcoh_sym_poincare(3, buf, &len) == ABELCOH_OK);
    CHECK(std::vector<int64_t>(buf, buf + len) == std::vector<int64_t>{1, 2, 2, 1});
    len = 32;
    REQUIRE(abelcoh_ideal_generating(3, buf, &len) == ABELCOH_OK);
    CHECK(std::vector<int64_t>(buf, buf + len) == std::vector<int64_t>{1, 1, 1, 2, 1, 1, 1});
    len = 32;
    REQUIRE(abelcoh_ideal_histogram(3, buf, &len) == ABELCOH_OK);
    CHECK(len == 7);
    len = 2;
    CHECK(abelcoh_weyl_poincare(3, buf, &len) == ABELCOH_BUFFER_TOO_SMALL);
    CHECK(len == 10);
    CHECK(abelcoh_weyl_poincare(0, buf, &len) == ABELCOH_INVALID_ARGUMENT);

    abelcoh_session* s = nullptr;
    REQUIRE(abelcoh_session_create(&s) == ABELCOH_OK);
    len = 32;
    REQUIRE(abelcoh_betti_numbers(s, 3, buf, &len) == ABELCOH_OK);
    CHECK(std::vector<int64_t>(buf, buf + len) == std::vector<int64_t>{1, 3, 5, 7, 8, 8, 7, 5, 3, 1});
    len = 32;
    CHECK(abelcoh_betti_numbers(s, 4, buf, &len) == ABELCOH_CAP_EXCEEDED);
    abelcoh_session_destroy(s);
}

TEST_CASE("pair and inverse through the C API") {
    const int w[] = {-1, 2}; // r1
    int eta[2], bounds[2], rows = -1;
    REQUIRE(abelcoh_pair(2, w, eta, bounds, &rows) == ABELCOH_OK);
    CHECK(eta[0] == 2);
    CHECK(eta[1] == 1);
    CHECK(rows == 1);
    CHECK(bounds[0] == 2);
    int back[2];
    REQUIRE(abelcoh_inverse(2, eta, bounds, rows, back) == ABELCOH_OK);
    CHECK(back[0] == -1);
    CHECK(back[1] == 2);
    const int bad[] = {1, 1};
    CHECK(abelcoh_pair(2, bad, eta, bounds, &rows) == ABELCOH_INVALID_ARGUMENT);
    const int bad_bounds[] = {1};
    CHECK(abelcoh_inverse(2, eta, bad_bounds, 1, back) == ABELCOH_OK);
    CHECK(abelcoh_inverse(2, eta, bad_bounds, 3, back) == ABELCOH_INVALID_ARGUMENT);
}
