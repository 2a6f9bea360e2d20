#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "json.hpp"

#include "fbk/homalg.hpp"
#include "fbk/koszul.hpp"

namespace fbk {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kReportSchema = "fbkoszul-report/1";
constexpr int kMaxSessionBound = 8;

// A request that is well formed but not available for the chosen operad.
class FbUnsupported : public FbError {
public:
    using FbError::FbError;
};

// All objects built from one operad presentation and arity bound, created on
// first use. Reports are JSON fragments with deterministic key order.
class Session {
public:
    Session(OperadPresentation pres, std::string source, int bound);

    const OperadPresentation& presentation() const { return pres_; }
    const std::string& source() const { return source_; }
    int bound() const { return bound_; }
    std::string presentation_hash() const { return hash_; }
    bool is_com() const { return is_com_; }
    bool is_lie() const { return is_lie_; }

    static const std::vector<std::string>& object_names();
    static const std::vector<std::string>& suite_names();
    static std::vector<std::string> default_objects();

    // Throws FbError when the window leaves [0, bound]^2.
    void check_window(const Window& w) const;

    // {"tables": {object: [{s, t, degree, dim}]}}
    nlohmann::json dims(const std::vector<std::string>& objects, const Window& w, int workers);
    // {"verdicts": [...], "tables": {...}, "characters": [...], "timings": {...}, "pass": bool}
    nlohmann::json verify(const std::string& suite, const Window& w, int workers, bool inject_fault);
    // Basis degrees and differential matrices of one object on the window.
    nlohmann::json export_object(const std::string& object, const Window& w);

    std::size_t dim(const std::string& object, int s, int t, int degree);
    std::size_t homology_dim(const std::string& object, int s, int t, int degree);

    // Receives short progress lines; may be called from worker threads.
    void set_progress(std::function<void(const std::string&)> sink);
    void progress(const std::string& line);

    // The object as a bimodule complex (categories with their own differential).
    DgBimodulePtr object(const std::string& name);

private:
    OperadPresentation pres_;
    std::string source_;
    int bound_;
    std::string hash_;
    bool is_com_ = false, is_lie_ = false;
    std::mutex mu_, progress_mu_;
    std::function<void(const std::string&)> progress_;
    std::map<std::string, DgBimodulePtr> cache_;
    OperadCategoryPtr catp_, lie_;
    UnitalCategoryPtr catpu_, kfi_;

    OperadCategoryPtr catp();
    OperadCategoryPtr catlie();
    UnitalCategoryPtr catpu();
    UnitalCategoryPtr kfi();
    DgBimodulePtr build(const std::string& name);
};

}  // namespace fbk
