#pragma once

#include "affinegerm/classify.hpp"
#include "affinegerm/expr.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ag::cli {

inline constexpr int kCliDefaultOrder = 16;
inline constexpr const char* kOrderEnv = "AFFINEGERM_ORDER";

// "key: value" lines; '#' starts a comment.  A bare "riccati:" line is a
// section header for the alpha/beta/gamma lines that follow.
struct JobLine {
    std::string value;
    int line = 0;
    int column = 0;  // of the value
};

struct JobFile {
    enum class Kind { Pencil, Riccati, Web, Model, OneForm } kind = Kind::Pencil;
    std::optional<int> order;
    std::map<std::string, JobLine> fields;
    const JobLine& at(const std::string& key) const;
};

JobFile parse_job(const std::string& text);

// Affine models "I(3/2)", "IV(2,1)"; web models "WebI(1,2)", "WebIII(1)".
struct ModelSpec {
    bool web = false;
    AffineModel affine;
    WebModel webmodel;
};
ModelSpec parse_model(const std::string& text);

struct Outcome {
    int exit_code = 0;
    nlohmann::ordered_json body;
};

// Order precedence: explicit flag, then "order:" in the job, then the
// environment variable, then kCliDefaultOrder.
int resolve_order(std::optional<int> flag, const JobFile& job);

std::vector<std::string> commands();
// `command` is "group sub", e.g. "pencil induce".  Never throws.
Outcome run(const std::string& command, const std::string& job_text, std::optional<int> order);
std::string render(const Outcome& o, bool pretty);

}  // namespace ag::cli
