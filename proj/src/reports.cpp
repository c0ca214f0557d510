#include "ontosim/reports.hpp"

#include <cstdio>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace ontosim {
namespace {

using nlohmann::json;

std::string full(double v) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", v);
    return buffer;
}

std::string two(double v) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.2f", v);
    return buffer;
}

std::string weights_csv(const Weights& w) {
    return full(w.alpha) + "," + full(w.beta) + "," + full(w.gamma);
}

// One '#' line carrying the whole effective configuration.
std::string config_comment(const ConfigEcho& echo) {
    std::string line = "# approach=" + echo.approach + " backend=" + echo.backend +
                       " weights=" + weights_csv(echo.weights) + " set_mode=" + echo.set_mode +
                       " numeric_mode=" + echo.numeric_mode +
                       " clamp_negative=" + (echo.clamp_negative ? "true" : "false");
    if (!echo.embedding_path.empty()) {
        line += " embeddings=" + echo.embedding_path + " digest=" + echo.embedding_digest;
    }
    return line + "\n";
}

std::string config_block(const ConfigEcho& echo) {
    std::ostringstream out;
    out << "approach:       " << echo.approach << "\n"
        << "backend:        " << echo.backend << "\n"
        << "weights:        alpha=" << full(echo.weights.alpha)
        << " beta=" << full(echo.weights.beta) << " gamma=" << full(echo.weights.gamma) << "\n"
        << "set mode:       " << echo.set_mode << "\n"
        << "numeric mode:   " << echo.numeric_mode << "\n"
        << "clamp negative: " << (echo.clamp_negative ? "true" : "false") << "\n";
    if (!echo.embedding_path.empty()) {
        out << "embeddings:     " << echo.embedding_path << " (digest " << echo.embedding_digest
            << ")\n";
    }
    out << "\n";
    return out.str();
}

json config_json(const ConfigEcho& echo) {
    return json{{"approach", echo.approach},
                {"backend", echo.backend},
                {"weights",
                 {{"alpha", echo.weights.alpha},
                  {"beta", echo.weights.beta},
                  {"gamma", echo.weights.gamma}}},
                {"set_mode", echo.set_mode},
                {"numeric_mode", echo.numeric_mode},
                {"clamp_negative", echo.clamp_negative},
                {"embedding_path", echo.embedding_path},
                {"embedding_digest", echo.embedding_digest}};
}

std::string dump(const json& document) {
    return document.dump(2) + "\n";
}

}  // namespace

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t hash = 14695981039346656037ULL;
    for (const char c : bytes) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 1099511628211ULL;
    }
    return hash;
}

std::string fnv1a64_hex(std::string_view bytes) {
    char buffer[24];
    std::snprintf(buffer, sizeof(buffer), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(bytes)));
    return buffer;
}

std::string render_validation(const std::vector<ValidationEntry>& entries,
                              const ConfigEcho& echo, OutputFormat format) {
    if (format == OutputFormat::Json) {
        json files = json::array();
        for (const auto& e : entries) {
            files.push_back({{"label", e.label},
                             {"triples", e.triples},
                             {"qualitative", e.qualitative},
                             {"quantitative", e.quantitative},
                             {"tokens", e.tokens},
                             {"oov_tokens", e.oov_tokens},
                             {"oov_words", e.oov_words}});
        }
        return dump(json{{"config", config_json(echo)}, {"files", files}});
    }
    if (format == OutputFormat::Csv) {
        std::string out = config_comment(echo);
        out += "label,triples,qualitative,quantitative,tokens,oov_tokens,oov_words\n";
        for (const auto& e : entries) {
            std::string words;
            for (const auto& w : e.oov_words) {
                if (!words.empty()) words += ';';
                words += w;
            }
            out += e.label + "," + std::to_string(e.triples) + "," +
                   std::to_string(e.qualitative) + "," + std::to_string(e.quantitative) + "," +
                   std::to_string(e.tokens) + "," + std::to_string(e.oov_tokens) + "," + words +
                   "\n";
        }
        return out;
    }

    std::ostringstream out;
    out << config_block(echo);
    out << std::left << std::setw(12) << "label" << std::right << std::setw(8) << "triples"
        << std::setw(8) << "qual" << std::setw(8) << "quant" << std::setw(8) << "tokens"
        << std::setw(8) << "oov" << std::setw(10) << "coverage"
        << "\n";
    for (const auto& e : entries) {
        const double coverage =
            e.tokens == 0 ? 1.0
                          : static_cast<double>(e.tokens - e.oov_tokens) /
                                static_cast<double>(e.tokens);
        out << std::left << std::setw(12) << e.label << std::right << std::setw(8) << e.triples
            << std::setw(8) << e.qualitative << std::setw(8) << e.quantitative << std::setw(8)
            << e.tokens << std::setw(8) << e.oov_tokens << std::setw(9) << two(coverage * 100.0)
            << "%\n";
    }
    bool any = false;
    for (const auto& e : entries) {
        if (e.oov_words.empty()) continue;
        if (!any) {
            out << "\nout-of-vocabulary words:\n";
            any = true;
        }
        out << "  " << e.label << ":";
        for (const auto& w : e.oov_words) out << ' ' << w;
        out << "\n";
    }
    return out.str();
}

std::string render_matrix(const SimilarityMatrix& matrix, const ConfigEcho& echo,
                          OutputFormat format) {
    const std::size_t n = matrix.labels.size();
    if (format == OutputFormat::Json) {
        return dump(json{{"config", config_json(echo)},
                         {"labels", matrix.labels},
                         {"mode", echo.set_mode},
                         {"backend", echo.backend},
                         {"weights",
                          {{"alpha", echo.weights.alpha},
                           {"beta", echo.weights.beta},
                           {"gamma", echo.weights.gamma}}},
                         {"values", matrix.values}});
    }
    if (format == OutputFormat::Csv) {
        std::string out = config_comment(echo);
        out += "label";
        for (const auto& label : matrix.labels) out += "," + label;
        out += "\n";
        for (std::size_t i = 0; i < n; ++i) {
            out += matrix.labels[i];
            for (std::size_t j = 0; j < n; ++j) out += "," + full(matrix.at(i, j));
            out += "\n";
        }
        return out;
    }

    std::size_t width = 6;
    for (const auto& label : matrix.labels) width = std::max(width, label.size() + 2);
    std::ostringstream out;
    out << config_block(echo);
    out << std::setw(static_cast<int>(width)) << "";
    for (const auto& label : matrix.labels) out << std::setw(static_cast<int>(width)) << label;
    out << "\n";
    for (std::size_t i = 0; i < n; ++i) {
        out << std::setw(static_cast<int>(width)) << matrix.labels[i];
        for (std::size_t j = 0; j < n; ++j) {
            out << std::setw(static_cast<int>(width)) << two(matrix.at(i, j));
        }
        out << "\n";
    }
    return out.str();
}

std::string render_ranking(const RankedList& ranking, const ConfigEcho& echo,
                           OutputFormat format) {
    if (format == OutputFormat::Json) {
        json entries = json::array();
        std::size_t rank = 1;
        for (const auto& e : ranking.entries) {
            entries.push_back({{"rank", rank++}, {"label", e.label}, {"score", e.score}});
        }
        return dump(json{{"config", config_json(echo)}, {"entries", entries}});
    }
    if (format == OutputFormat::Csv) {
        std::string out = config_comment(echo);
        out += "rank,label,score\n";
        std::size_t rank = 1;
        for (const auto& e : ranking.entries) {
            out += std::to_string(rank++) + "," + e.label + "," + full(e.score) + "\n";
        }
        return out;
    }

    std::ostringstream out;
    out << config_block(echo);
    out << std::right << std::setw(4) << "rank"
        << "  " << std::left << std::setw(16) << "label"
        << "score\n";
    std::size_t rank = 1;
    for (const auto& e : ranking.entries) {
        out << std::right << std::setw(4) << rank++ << "  " << std::left << std::setw(16)
            << e.label << two(e.score) << "\n";
    }
    return out.str();
}

std::string render_comparison(const std::vector<ComparisonRow>& rows, const ConfigEcho& echo,
                              OutputFormat format) {
    if (format == OutputFormat::Json) {
        json out_rows = json::array();
        for (const auto& r : rows) {
            out_rows.push_back({{"left", r.left},
                                {"right", r.right},
                                {"n1", r.n1},
                                {"n2", r.n2},
                                {"ablation", r.ablation}});
        }
        return dump(json{{"config", config_json(echo)}, {"rows", out_rows}});
    }
    if (format == OutputFormat::Csv) {
        std::string out = config_comment(echo);
        out += "left,right,n1,n2,ablation\n";
        for (const auto& r : rows) {
            out += r.left + "," + r.right + "," + full(r.n1) + "," + full(r.n2) + "," +
                   full(r.ablation) + "\n";
        }
        return out;
    }

    std::ostringstream out;
    out << config_block(echo);
    out << std::left << std::setw(16) << "pair" << std::right << std::setw(10) << "n1"
        << std::setw(10) << "n2" << std::setw(10) << "ablation"
        << "\n";
    for (const auto& r : rows) {
        out << std::left << std::setw(16) << (r.left + "/" + r.right) << std::right
            << std::setw(10) << two(r.n1) << std::setw(10) << two(r.n2) << std::setw(10)
            << two(r.ablation) << "\n";
    }
    return out.str();
}

}  // namespace ontosim
