#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace z2rep {

enum class OutputFormat : std::uint8_t { json, csv };

struct RunConfig {
    int level_cap = 16;
    /// Bounds M sweeps; classification falls back to classification_m_cap when unset.
    std::optional<int> m_cap;
    int samples = 5;
    std::uint64_t seed = 0;
    OutputFormat output_format = OutputFormat::json;
    std::optional<std::string> output_path;

    static constexpr int default_m_cap = 6;
    static constexpr int classification_m_cap = 32;

    int sweep_m_cap() const { return m_cap.value_or(default_m_cap); }
    int classify_m_cap() const { return m_cap.value_or(classification_m_cap); }

    /// Throws std::invalid_argument if a cap or the sample count is not positive.
    void validate() const;
};

/// Overlays the keys present in a JSON object onto cfg: level_cap, M_cap
/// (or m_cap), samples, seed, output_format, output_path. Unknown keys and
/// ill-typed values throw std::invalid_argument.
void apply_config_json(RunConfig& cfg, const std::string& json_text);

/// Reads the file named by Z2REP_CONFIG, if set.
void apply_config_env(RunConfig& cfg);

OutputFormat parse_output_format(const std::string& text);

}  // namespace z2rep
