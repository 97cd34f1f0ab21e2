// C API over the dcgrid core: opaque handles, status codes, no exceptions
// across the boundary.
#include "dcgrid.h"

#include <new>

#include "constructions.hpp"
#include "point_set.hpp"
#include "verification.hpp"

struct dcg_point_set {
    dcgrid::PointSet impl;
};

namespace {

dcg_status status_from_current_exception() {
    try {
        throw;
    } catch (const std::invalid_argument&) {
        return DCG_ERROR_DOMAIN;
    } catch (const std::overflow_error&) {
        return DCG_ERROR_OVERFLOW;
    } catch (const std::length_error&) {
        return DCG_ERROR_CAPACITY;
    } catch (const std::bad_alloc&) {
        return DCG_ERROR_CAPACITY;
    } catch (...) {
        return DCG_ERROR_INTERNAL;
    }
}

template <typename F>
dcg_status wrap(F&& f) {
    try {
        return f();
    } catch (...) {
        return status_from_current_exception();
    }
}

dcg_status make_set(dcgrid::PointSet ps, dcg_point_set** out) {
    *out = new dcg_point_set{std::move(ps)};
    return DCG_OK;
}

} // namespace

extern "C" {

const char* dcg_status_message(dcg_status status) {
    switch (status) {
        case DCG_OK: return "ok";
        case DCG_ERROR_DOMAIN: return "argument outside the documented domain";
        case DCG_ERROR_OVERFLOW: return "exact 64-bit arithmetic would overflow";
        case DCG_ERROR_CAPACITY: return "result exceeds the memory budget";
        case DCG_ERROR_NULL: return "required pointer argument was null";
        case DCG_ERROR_INDEX: return "index out of range";
        case DCG_ERROR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* dcg_version(void) { return "1.0.0"; }

const char* dcg_condition_tag(int condition) {
    return dcgrid::condition_tag(static_cast<dcgrid::Condition>(condition));
}

dcg_status dcg_double_circle(int64_t n, dcg_point_set** out) {
    if (!out) return DCG_ERROR_NULL;
    *out = nullptr;
    return wrap([&] { return make_set(dcgrid::build_double_circle(n), out); });
}

dcg_status dcg_quadratic_baseline(int64_t n, dcg_point_set** out) {
    if (!out) return DCG_ERROR_NULL;
    *out = nullptr;
    return wrap([&] { return make_set(dcgrid::quadratic_baseline(n), out); });
}

dcg_status dcg_naive_symmetric(int64_t n, dcg_point_set** out) {
    if (!out) return DCG_ERROR_NULL;
    *out = nullptr;
    return wrap([&] { return make_set(dcgrid::naive_symmetric(n), out); });
}

dcg_status dcg_jarnik_polygon(int64_t q, dcg_point_set** out) {
    if (!out) return DCG_ERROR_NULL;
    *out = nullptr;
    return wrap([&] { return make_set(dcgrid::jarnik_polygon(q), out); });
}

dcg_status dcg_jarnik_counts(int64_t q, dcg_jarnik_summary* out) {
    if (!out) return DCG_ERROR_NULL;
    return wrap([&] {
        dcgrid::JarnikSummary s = dcgrid::jarnik_counts(q);
        out->vertex_count = s.vertex_count;
        out->grid_size = s.size_s;
        return DCG_OK;
    });
}

dcg_status dcg_point_set_create(const int64_t* coords, int64_t count, dcg_point_set** out) {
    if (!coords || !out) return DCG_ERROR_NULL;
    *out = nullptr;
    if (count < 0) return DCG_ERROR_DOMAIN;
    return wrap([&] {
        std::vector<dcgrid::Vec> pts;
        pts.reserve(static_cast<size_t>(count));
        for (int64_t i = 0; i < count; ++i) pts.push_back({coords[2 * i], coords[2 * i + 1]});
        return make_set(dcgrid::make_point_set(std::move(pts)), out);
    });
}

void dcg_point_set_free(dcg_point_set* set) { delete set; }

int64_t dcg_point_set_size(const dcg_point_set* set) {
    return set ? static_cast<int64_t>(set->impl.size()) : -1;
}

dcg_status dcg_point_set_point(const dcg_point_set* set, int64_t index, int64_t* x, int64_t* y) {
    if (!set || !x || !y) return DCG_ERROR_NULL;
    if (index < 0 || index >= static_cast<int64_t>(set->impl.size())) return DCG_ERROR_INDEX;
    *x = set->impl.points[static_cast<size_t>(index)].x;
    *y = set->impl.points[static_cast<size_t>(index)].y;
    return DCG_OK;
}

int dcg_point_set_role(const dcg_point_set* set, int64_t index) {
    if (!set || index < 0 || index >= static_cast<int64_t>(set->impl.size())) return -1;
    return static_cast<int>(set->impl.roles[static_cast<size_t>(index)]);
}

dcg_status dcg_point_set_grid_size(const dcg_point_set* set, int64_t* out) {
    if (!set || !out) return DCG_ERROR_NULL;
    return wrap([&] {
        *out = dcgrid::grid_size(set->impl);
        return DCG_OK;
    });
}

dcg_status dcg_point_set_translate_to_grid(dcg_point_set* set) {
    if (!set) return DCG_ERROR_NULL;
    return wrap([&] {
        set->impl = dcgrid::translate_to_grid(std::move(set->impl));
        return DCG_OK;
    });
}

dcg_status dcg_verify_double_circle(const dcg_point_set* set, dcg_verify_report* report) {
    if (!set || !report) return DCG_ERROR_NULL;
    return wrap([&] {
        dcgrid::VerificationReport r = dcgrid::is_double_circle(set->impl);
        report->passed = r.passed ? 1 : 0;
        report->failed_condition = static_cast<int>(r.failed);
        for (int i = 0; i < 3; ++i)
            report->witness[i] =
                i < static_cast<int>(r.witness.size()) ? static_cast<int64_t>(r.witness[i]) : -1;
        report->hull_count = static_cast<int64_t>(r.hull_count);
        return DCG_OK;
    });
}

} // extern "C"
