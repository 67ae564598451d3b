#include "cbal/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cbal {

void RunConfig::finalize() {
    params.finalize();
    params.validate();
    if (horizon < 1) throw std::invalid_argument("RunConfig: horizon must be >= 1");
    if (replications < 1) throw std::invalid_argument("RunConfig: replications must be >= 1");
    if (!(landscape.steepness > 0.0))
        throw std::invalid_argument("RunConfig: steepness must be positive");
}

RunConfig default_config() {
    RunConfig cfg;
    cfg.params.context_dim = 1;
    cfg.params.arm_dim = 1;
    cfg.params.lip_context = 0.5;
    cfg.params.lip_arm = 0.5;
    cfg.params.cost_scale = 0.5;
    cfg.params.cost_eta = 1.0;
    cfg.params.cost_beta1 = 1.0;
    cfg.params.cost_beta2 = 2.0;
    cfg.landscape.family = LandscapeFamily::peak;
    cfg.landscape.steepness = 0.5;
    cfg.horizon = 10000;
    cfg.replications = 20;
    cfg.seed = 1;
    return cfg;
}

std::string to_string(ArmPick pick) {
    return pick == ArmPick::center ? "center" : "random";
}

ArmPick parse_arm_pick(std::string_view name) {
    if (name == "center") return ArmPick::center;
    if (name == "random") return ArmPick::random;
    throw std::invalid_argument("unknown arm_pick '" + std::string(name) + "'");
}

std::string to_string(LandscapeFamily family) {
    return family == LandscapeFamily::peak ? "peak" : "dome";
}

LandscapeFamily parse_landscape_family(std::string_view name) {
    if (name == "peak") return LandscapeFamily::peak;
    if (name == "dome") return LandscapeFamily::dome;
    throw std::invalid_argument("unknown landscape '" + std::string(name) + "'");
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

[[noreturn]] void parse_fail(std::string_view origin, int line, const std::string& msg) {
    std::ostringstream out;
    out << origin << ":" << line << ": " << msg;
    throw std::invalid_argument(out.str());
}

double to_double(std::string_view v, std::string_view origin, int line) {
    try {
        return std::stod(std::string(v));
    } catch (const std::exception&) {
        parse_fail(origin, line, "expected a number, got '" + std::string(v) + "'");
    }
}

std::uint64_t to_u64(std::string_view v, std::string_view origin, int line) {
    std::uint64_t out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size())
        parse_fail(origin, line, "expected an unsigned integer, got '" + std::string(v) + "'");
    return out;
}

int to_int(std::string_view v, std::string_view origin, int line) {
    int out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size())
        parse_fail(origin, line, "expected an integer, got '" + std::string(v) + "'");
    return out;
}

bool to_bool(std::string_view v, std::string_view origin, int line) {
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    parse_fail(origin, line, "expected true/false, got '" + std::string(v) + "'");
}

}  // namespace

RunConfig parse_config(std::string_view text, std::string_view origin) {
    RunConfig cfg = default_config();
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                               : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            parse_fail(origin, line_no, "expected 'key = value'");
        const std::string key{trim(line.substr(0, eq))};
        const std::string_view value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            parse_fail(origin, line_no, "expected 'key = value'");

        try {
            if (key == "policy") cfg.policy = parse_policy_kind(value);
            else if (key == "horizon") cfg.horizon = to_u64(value, origin, line_no);
            else if (key == "seed") cfg.seed = to_u64(value, origin, line_no);
            else if (key == "replications") cfg.replications = to_int(value, origin, line_no);
            else if (key == "context_dim") cfg.params.context_dim = to_int(value, origin, line_no);
            else if (key == "arm_dim") cfg.params.arm_dim = to_int(value, origin, line_no);
            else if (key == "alpha") cfg.params.alpha = to_double(value, origin, line_no);
            else if (key == "gamma") cfg.params.gamma = to_double(value, origin, line_no);
            else if (key == "lip_context") cfg.params.lip_context = to_double(value, origin, line_no);
            else if (key == "lip_arm") cfg.params.lip_arm = to_double(value, origin, line_no);
            else if (key == "margin") cfg.params.margin = to_double(value, origin, line_no);
            else if (key == "cost_scale") cfg.params.cost_scale = to_double(value, origin, line_no);
            else if (key == "cost_eta") cfg.params.cost_eta = to_double(value, origin, line_no);
            else if (key == "cost_beta1") cfg.params.cost_beta1 = to_double(value, origin, line_no);
            else if (key == "cost_beta2") cfg.params.cost_beta2 = to_double(value, origin, line_no);
            else if (key == "landscape") cfg.landscape.family = parse_landscape_family(value);
            else if (key == "steepness") cfg.landscape.steepness = to_double(value, origin, line_no);
            else if (key == "arm_pick") cfg.arm_pick = parse_arm_pick(value);
            else if (key == "record_trace") cfg.record_trace = to_bool(value, origin, line_no);
            else if (key == "out_dir") cfg.out_dir = std::string(value);
            else parse_fail(origin, line_no, "unknown key '" + key + "'");
        } catch (const std::invalid_argument& e) {
            std::string msg = e.what();
            if (msg.rfind(std::string(origin), 0) == 0) throw;  // already located
            parse_fail(origin, line_no, msg);
        }
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path);
}

}  // namespace cbal
