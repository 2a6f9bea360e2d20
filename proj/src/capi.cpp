#include "fbkoszul.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>

#include "fbk/session.hpp"

struct fbk_session {
    std::unique_ptr<fbk::Session> impl;
    std::string error;
    std::string hash;
};

namespace {

char* dup_string(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (p) std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

fbk::Window to_window(const fbk_window& w) { return fbk::Window{w.s_lo, w.s_hi, w.t_lo, w.t_hi}; }

bool window_inside(const fbk_session* s, const fbk_window& w) {
    int n = s->impl->bound();
    return w.s_lo >= 0 && w.t_lo >= 0 && w.s_lo <= w.s_hi && w.t_lo <= w.t_hi && w.s_hi <= n && w.t_hi <= n;
}

bool known(const std::vector<std::string>& names, const std::string& n) {
    return std::find(names.begin(), names.end(), n) != names.end();
}

// Runs body and maps exceptions to status codes, recording the message.
template <typename F>
fbk_status guarded(fbk_session* s, F body) {
    if (!s) return FBK_INVALID_ARGUMENT;
    s->error.clear();
    try {
        return body();
    } catch (const std::bad_alloc&) {
        s->error = "out of memory";
        return FBK_OUT_OF_MEMORY;
    } catch (const fbk::FbUnsupported& e) {
        s->error = e.what();
        return FBK_UNSUPPORTED;
    } catch (const std::exception& e) {
        s->error = e.what();
        return FBK_COMPUTE_ERROR;
    }
}

fbk_status emit(fbk_session* s, const nlohmann::json& j, char** out) {
    *out = dup_string(j.dump());
    if (!*out) {
        s->error = "out of memory";
        return FBK_OUT_OF_MEMORY;
    }
    return FBK_OK;
}

const char* const* c_list(const std::vector<std::string>& names) {
    auto* v = new std::vector<const char*>();
    for (const auto& n : names) v->push_back(n.c_str());
    v->push_back(nullptr);
    return v->data();
}

}  // namespace

extern "C" {

const char* fbk_version(void) { return fbk::kToolVersion; }
const char* fbk_report_schema(void) { return fbk::kReportSchema; }
int fbk_max_bound(void) { return fbk::kMaxSessionBound; }

const char* fbk_status_string(fbk_status status) {
    switch (status) {
        case FBK_OK: return "ok";
        case FBK_INVALID_ARGUMENT: return "invalid argument";
        case FBK_BOUND_EXCEEDED: return "bound exceeded";
        case FBK_BAD_PRESENTATION: return "bad presentation";
        case FBK_UNSUPPORTED: return "unsupported";
        case FBK_COMPUTE_ERROR: return "computation error";
        case FBK_OUT_OF_MEMORY: return "out of memory";
    }
    return "unknown status";
}

fbk_status fbk_session_open(const char* operad, int bound, fbk_session** out, char** error) {
    if (out) *out = nullptr;
    if (error) *error = nullptr;
    auto fail = [&](fbk_status st, const std::string& msg) {
        if (error) *error = dup_string(msg);
        return st;
    };
    if (!operad || !out) return fail(FBK_INVALID_ARGUMENT, "operad and out must be non-null");
    if (bound < 0 || bound > fbk::kMaxSessionBound) {
        std::ostringstream o;
        o << "arity bound " << bound << " outside [0, " << fbk::kMaxSessionBound << "]";
        return fail(FBK_BOUND_EXCEEDED, o.str());
    }
    fbk::OperadPresentation pres;
    try {
        pres = fbk::load_operad(operad);
        pres.validate();
    } catch (const std::exception& e) {
        return fail(FBK_BAD_PRESENTATION, e.what());
    }
    try {
        auto* s = new fbk_session;
        s->impl = std::make_unique<fbk::Session>(std::move(pres), operad, bound);
        s->hash = s->impl->presentation_hash();
        *out = s;
        return FBK_OK;
    } catch (const std::bad_alloc&) {
        return fail(FBK_OUT_OF_MEMORY, "out of memory");
    } catch (const std::exception& e) {
        return fail(FBK_COMPUTE_ERROR, e.what());
    }
}

void fbk_session_close(fbk_session* session) { delete session; }

const char* fbk_session_error(const fbk_session* session) { return session ? session->error.c_str() : ""; }

const char* fbk_session_presentation_hash(const fbk_session* session) {
    return session ? session->hash.c_str() : "";
}

int fbk_session_bound(const fbk_session* session) { return session ? session->impl->bound() : -1; }

void fbk_session_set_progress(fbk_session* session, fbk_progress_fn fn, void* user) {
    if (!session) return;
    if (!fn) session->impl->set_progress(nullptr);
    else session->impl->set_progress([fn, user](const std::string& line) { fn(user, line.c_str()); });
}

fbk_status fbk_dims_json(fbk_session* session, const char* objects, fbk_window window, int workers,
                         char** out_json) {
    return guarded(session, [&]() -> fbk_status {
        if (!out_json) return FBK_INVALID_ARGUMENT;
        *out_json = nullptr;
        if (!window_inside(session, window)) {
            session->error = "window outside [0, N]^2";
            return FBK_BOUND_EXCEEDED;
        }
        std::vector<std::string> names;
        if (!objects || !*objects) names = fbk::Session::default_objects();
        else {
            std::stringstream ss(objects);
            std::string n;
            while (std::getline(ss, n, ','))
                if (!n.empty()) names.push_back(n);
        }
        for (const auto& n : names)
            if (!known(fbk::Session::object_names(), n)) {
                session->error = "unknown object '" + n + "'";
                return FBK_INVALID_ARGUMENT;
            }
        return emit(session, session->impl->dims(names, to_window(window), workers), out_json);
    });
}

fbk_status fbk_verify_json(fbk_session* session, const char* suite, fbk_window window, int workers,
                           int inject_fault, int* all_pass, char** out_json) {
    return guarded(session, [&]() -> fbk_status {
        if (!out_json || !suite) return FBK_INVALID_ARGUMENT;
        *out_json = nullptr;
        if (!known(fbk::Session::suite_names(), suite)) {
            session->error = std::string("unknown suite '") + suite + "'";
            return FBK_INVALID_ARGUMENT;
        }
        if (!window_inside(session, window)) {
            session->error = "window outside [0, N]^2";
            return FBK_BOUND_EXCEEDED;
        }
        auto j = session->impl->verify(suite, to_window(window), workers, inject_fault != 0);
        if (all_pass) *all_pass = j.value("pass", false) ? 1 : 0;
        return emit(session, j, out_json);
    });
}

fbk_status fbk_export_json(fbk_session* session, const char* object, fbk_window window, char** out_json) {
    return guarded(session, [&]() -> fbk_status {
        if (!out_json || !object) return FBK_INVALID_ARGUMENT;
        *out_json = nullptr;
        if (!known(fbk::Session::object_names(), object)) {
            session->error = std::string("unknown object '") + object + "'";
            return FBK_INVALID_ARGUMENT;
        }
        if (!window_inside(session, window)) {
            session->error = "window outside [0, N]^2";
            return FBK_BOUND_EXCEEDED;
        }
        return emit(session, session->impl->export_object(object, to_window(window)), out_json);
    });
}

static fbk_status point_query(fbk_session* session, const char* object, int s, int t, size_t* out, bool homology,
                              int degree) {
    return guarded(session, [&]() -> fbk_status {
        if (!object || !out) return FBK_INVALID_ARGUMENT;
        if (!known(fbk::Session::object_names(), object)) {
            session->error = std::string("unknown object '") + object + "'";
            return FBK_INVALID_ARGUMENT;
        }
        if (!window_inside(session, fbk_window{s, s, t, t})) {
            session->error = "bidegree outside [0, N]^2";
            return FBK_BOUND_EXCEEDED;
        }
        *out = homology ? session->impl->homology_dim(object, s, t, degree) : session->impl->dim(object, s, t, degree);
        return FBK_OK;
    });
}

fbk_status fbk_dim(fbk_session* session, const char* object, int s, int t, int degree, size_t* out) {
    return point_query(session, object, s, t, out, false, degree);
}

fbk_status fbk_homology_dim(fbk_session* session, const char* object, int s, int t, int degree, size_t* out) {
    return point_query(session, object, s, t, out, true, degree);
}

const char* const* fbk_object_names(void) {
    static const char* const* names = c_list(fbk::Session::object_names());
    return names;
}

const char* const* fbk_suite_names(void) {
    static const char* const* names = c_list(fbk::Session::suite_names());
    return names;
}

void fbk_string_free(char* s) { std::free(s); }

}  // extern "C"
