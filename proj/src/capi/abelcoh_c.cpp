#include <abelcoh/abelcoh.h>

#include "abelcoh/ce.hpp"
#include "abelcoh/commands.hpp"
#include "abelcoh/correspondence.hpp"
#include "abelcoh/error.hpp"
#include "abelcoh/ideals.hpp"
#include "abelcoh/poincare.hpp"

#include <exception>
#include <new>
#include <span>
#include <string>
#include <vector>

struct abelcoh_session {
    abelcoh::RunConfig config;
};

struct abelcoh_report {
    std::string text;
    bool passed = true;
};

namespace {

thread_local std::string last_error;

abelcoh_status fail(abelcoh_status status, std::string message) {
    last_error = std::move(message);
    return status;
}

// Maps the core's exceptions onto status codes.
template <class F>
abelcoh_status guarded(F&& f) {
    try {
        last_error.clear();
        return f();
    } catch (const abelcoh::CapExceeded& e) {
        return fail(ABELCOH_CAP_EXCEEDED, e.what());
    } catch (const abelcoh::InvalidArgument& e) {
        return fail(ABELCOH_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(ABELCOH_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(ABELCOH_INTERNAL, e.what());
    } catch (...) {
        return fail(ABELCOH_INTERNAL, "unknown error");
    }
}

abelcoh_status copy_out(const std::vector<std::int64_t>& v, int64_t* out, size_t* len) {
    if (len == nullptr) return fail(ABELCOH_INVALID_ARGUMENT, "len is null");
    const size_t capacity = *len;
    *len = v.size();
    if (capacity < v.size()) return fail(ABELCOH_BUFFER_TOO_SMALL, "buffer holds " + std::to_string(capacity) + " of " + std::to_string(v.size()) + " coefficients");
    if (out == nullptr && !v.empty()) return fail(ABELCOH_INVALID_ARGUMENT, "output buffer is null");
    for (size_t k = 0; k < v.size(); ++k) out[k] = v[k];
    return ABELCOH_OK;
}

#define ABELCOH_REQUIRE(cond, msg) \
    if (!(cond)) return fail(ABELCOH_INVALID_ARGUMENT, msg)

} // namespace

extern "C" {

const char* abelcoh_version(void) { return "0.1.0"; }

const char* abelcoh_last_error(void) { return last_error.c_str(); }

const char* abelcoh_status_name(abelcoh_status status) {
    switch (status) {
    case ABELCOH_OK: return "ok";
    case ABELCOH_INVALID_ARGUMENT: return "invalid argument";
    case ABELCOH_CAP_EXCEEDED: return "cap exceeded";
    case ABELCOH_BUFFER_TOO_SMALL: return "buffer too small";
    case ABELCOH_INTERNAL: return "internal error";
    }
    return "unknown status";
}

abelcoh_status abelcoh_session_create(abelcoh_session** out) {
    ABELCOH_REQUIRE(out != nullptr, "out is null");
    return guarded([&] {
        *out = new abelcoh_session{};
        return ABELCOH_OK;
    });
}

void abelcoh_session_destroy(abelcoh_session* session) { delete session; }

abelcoh_status abelcoh_session_set_workers(abelcoh_session* session, unsigned workers) {
    ABELCOH_REQUIRE(session != nullptr, "session is null");
    ABELCOH_REQUIRE(workers >= 1, "worker count must be at least 1");
    session->config.workers = workers;
    return ABELCOH_OK;
}

abelcoh_status abelcoh_session_set_seed(abelcoh_session* session, uint64_t seed) {
    ABELCOH_REQUIRE(session != nullptr, "session is null");
    session->config.seed = seed;
    return ABELCOH_OK;
}

abelcoh_status abelcoh_session_set_caps(abelcoh_session* session, int combinatorial_cap, int cohomology_cap) {
    ABELCOH_REQUIRE(session != nullptr, "session is null");
    ABELCOH_REQUIRE(combinatorial_cap >= 1 && cohomology_cap >= 1, "caps must be at least 1");
    session->config.combinatorial_cap = combinatorial_cap;
    session->config.cohomology_cap = cohomology_cap;
    return ABELCOH_OK;
}

abelcoh_status abelcoh_session_set_allow_rank4(abelcoh_session* session, int allow) {
    ABELCOH_REQUIRE(session != nullptr, "session is null");
    session->config.allow_rank4_cohomology = allow != 0;
    return ABELCOH_OK;
}

abelcoh_status abelcoh_session_set_cache_dir(abelcoh_session* session, const char* dir) {
    ABELCOH_REQUIRE(session != nullptr, "session is null");
    return guarded([&] {
        session->config.cache_dir = dir ? dir : "";
        return ABELCOH_OK;
    });
}

abelcoh_status abelcoh_run(abelcoh_session* session, const abelcoh_request* request, abelcoh_report** out) {
    ABELCOH_REQUIRE(session != nullptr && request != nullptr && out != nullptr, "null argument");
    ABELCOH_REQUIRE(request->command != nullptr, "command is null");
    *out = nullptr;
    return guarded([&] {
        abelcoh::Request r;
        r.command = request->command;
        r.rank = request->rank;
        if (request->format != ABELCOH_FORMAT_JSON && request->format != ABELCOH_FORMAT_CSV)
            throw abelcoh::InvalidArgument("unknown output format");
        r.format = request->format == ABELCOH_FORMAT_CSV ? abelcoh::Format::Csv : abelcoh::Format::Json;
        r.list = request->list != 0;
        r.histogram = request->histogram != 0;
        r.per_weight = request->per_weight != 0;
        r.timing = request->timing != 0;
        if (request->witness) r.witness = request->witness;
        auto result = abelcoh::run_command(r, session->config);
        *out = new abelcoh_report{std::move(result.text), result.passed};
        return ABELCOH_OK;
    });
}

const char* abelcoh_report_text(const abelcoh_report* report) { return report ? report->text.c_str() : ""; }

int abelcoh_report_passed(const abelcoh_report* report) { return report && report->passed ? 1 : 0; }

int abelcoh_report_exit_code(const abelcoh_report* report) { return abelcoh_report_passed(report) ? 0 : 1; }

void abelcoh_report_destroy(abelcoh_report* report) { delete report; }

abelcoh_status abelcoh_weyl_poincare(int rank, int64_t* coeffs, size_t* len) {
    return guarded([&] {
        abelcoh::validate_rank(rank);
        return copy_out(abelcoh::weyl_poincare(rank).coefficients(), coeffs, len);
    });
}

abelcoh_status abelcoh_sym_poincare(int rank, int64_t* coeffs, size_t* len) {
    return guarded([&] {
        abelcoh::validate_rank(rank);
        return copy_out(abelcoh::sym_poincare(rank).coefficients(), coeffs, len);
    });
}

abelcoh_status abelcoh_ideal_generating(int rank, int64_t* coeffs, size_t* len) {
    return guarded([&] {
        abelcoh::validate_rank(rank);
        return copy_out(abelcoh::ideal_generating(rank).coefficients(), coeffs, len);
    });
}

abelcoh_status abelcoh_ideal_histogram(int rank, int64_t* coeffs, size_t* len) {
    return guarded([&] { return copy_out(abelcoh::dimension_histogram(rank).coefficients(), coeffs, len); });
}

abelcoh_status abelcoh_betti_numbers(abelcoh_session* session, int rank, int64_t* betti, size_t* len) {
    ABELCOH_REQUIRE(session != nullptr, "session is null");
    return guarded([&] {
        abelcoh::CohomologyOptions o;
        o.cap = session->config.cohomology_cap;
        o.allow_rank4 = session->config.allow_rank4_cohomology;
        o.workers = session->config.workers;
        o.cache_dir = session->config.cache_dir;
        return copy_out(abelcoh::betti_numbers(rank, o).betti, betti, len);
    });
}

abelcoh_status abelcoh_pair(int rank, const int* signed_images, int* eta, int* xi_bounds, int* xi_rows) {
    ABELCOH_REQUIRE(signed_images && eta && xi_bounds && xi_rows, "null argument");
    return guarded([&] {
        abelcoh::validate_rank(rank);
        const auto w = abelcoh::SignedPerm::from_signed_images(
            std::span<const int>(signed_images, static_cast<size_t>(rank)));
        const auto p = abelcoh::pair(w);
        for (int m = 1; m <= rank; ++m) eta[m - 1] = p.eta(m);
        const auto& b = p.xi.bounds();
        for (size_t k = 0; k < b.size(); ++k) xi_bounds[k] = b[k];
        *xi_rows = static_cast<int>(b.size());
        return ABELCOH_OK;
    });
}

abelcoh_status abelcoh_inverse(int rank, const int* sigma, const int* xi_bounds, int xi_rows, int* signed_images) {
    ABELCOH_REQUIRE(sigma && signed_images && (xi_rows == 0 || xi_bounds), "null argument");
    return guarded([&] {
        abelcoh::validate_rank(rank);
        if (xi_rows < 0 || xi_rows > rank) throw abelcoh::InvalidArgument("row count out of range");
        const auto s = abelcoh::Perm::from_images(std::span<const int>(sigma, static_cast<size_t>(rank)));
        const auto psi = abelcoh::IncreasingSet::from_bounds(
            rank, std::vector<int>(xi_bounds, xi_bounds + xi_rows));
        const auto w = abelcoh::inverse(s, psi);
        const auto images = w.signed_images();
        for (int m = 0; m < rank; ++m) signed_images[m] = images[static_cast<size_t>(m)];
        return ABELCOH_OK;
    });
}

} // extern "C"
