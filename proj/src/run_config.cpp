#include "z2rep/run_config.hpp"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace z2rep {

void RunConfig::validate() const
{
    if (level_cap < 1)
        throw std::invalid_argument("level_cap must be positive");
    if (m_cap && *m_cap < 0)
        throw std::invalid_argument("M_cap must be nonnegative");
    if (samples < 1)
        throw std::invalid_argument("samples must be positive");
}

OutputFormat parse_output_format(const std::string& text)
{
    if (text == "json")
        return OutputFormat::json;
    if (text == "csv")
        return OutputFormat::csv;
    throw std::invalid_argument("output format must be json or csv, got '" + text + "'");
}

void apply_config_json(RunConfig& cfg, const std::string& json_text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw std::invalid_argument("config must be a JSON object");

    auto integer = [](const nlohmann::json& v, const std::string& key) {
        if (!v.is_number_integer())
            throw std::invalid_argument("config key '" + key + "' must be an integer");
        return v.get<long long>();
    };
    for (const auto& [key, value] : j.items()) {
        if (key == "level_cap") {
            cfg.level_cap = static_cast<int>(integer(value, key));
        } else if (key == "M_cap" || key == "m_cap") {
            cfg.m_cap = static_cast<int>(integer(value, key));
        } else if (key == "samples") {
            cfg.samples = static_cast<int>(integer(value, key));
        } else if (key == "seed") {
            const long long s = integer(value, key);
            if (s < 0)
                throw std::invalid_argument("config key 'seed' must be nonnegative");
            cfg.seed = static_cast<std::uint64_t>(s);
        } else if (key == "output_format") {
            if (!value.is_string())
                throw std::invalid_argument("config key 'output_format' must be a string");
            cfg.output_format = parse_output_format(value.get<std::string>());
        } else if (key == "output_path") {
            if (value.is_null())
                cfg.output_path.reset();
            else if (value.is_string())
                cfg.output_path = value.get<std::string>();
            else
                throw std::invalid_argument("config key 'output_path' must be a string");
        } else {
            throw std::invalid_argument("unknown config key '" + key + "'");
        }
    }
}

void apply_config_env(RunConfig& cfg)
{
    const char* path = std::getenv("Z2REP_CONFIG");
    if (path == nullptr || *path == '\0')
        return;
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument(std::string("cannot read Z2REP_CONFIG file '") + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    apply_config_json(cfg, buffer.str());
}

}  // namespace z2rep
