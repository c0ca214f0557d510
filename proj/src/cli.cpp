#include "ontosim/cli.hpp"

#include "ontosim/embedding_store.hpp"
#include "ontosim/errors.hpp"
#include "ontosim/listing.hpp"
#include "ontosim/recommender.hpp"
#include "ontosim/reports.hpp"
#include "ontosim/similarity.hpp"
#include "ontosim/tfidf_model.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

namespace ontosim::cli {
namespace {

namespace fs = std::filesystem;

struct Options {
    std::string corpus;
    std::string profile;
    std::string approach;
    std::string weights;
    std::string set_mode;
    std::string numeric_mode;
    std::string embeddings;
    std::string config_file;
    std::string format = "table";
    std::string output;
    std::size_t top_k = std::numeric_limits<std::size_t>::max();
};

struct FileConfig {
    std::optional<double> alpha;
    std::optional<double> beta;
    std::optional<double> gamma;
    std::optional<std::string> backend;
    std::optional<std::string> set_mode;
    std::optional<std::string> numeric_mode;
    std::optional<std::string> embedding_path;
};

// The fully resolved run settings: CLI flags beat the config file, which
// beats the defaults (balanced weights, tfidf backend, normalized set mode,
// literal numeric mode).
struct Resolved {
    Weights weights;
    Backend backend = Backend::TfIdf;
    SetMode set_mode = SetMode::Normalized;
    NumericMode numeric_mode = NumericMode::Literal;
    std::string embedding_path;
    std::string approach_name = "n2";
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

double parse_weight(std::string_view text, const std::string& where) {
    double value = 0.0;
    const auto trimmed = trim(text);
    const auto [ptr, ec] =
        std::from_chars(trimmed.data(), trimmed.data() + trimmed.size(), value);
    if (ec != std::errc{} || ptr != trimmed.data() + trimmed.size()) {
        throw UsageError(where + ": cannot parse weight '" + std::string(trimmed) + "'");
    }
    if (value < 0.0) {
        throw UsageError(where + ": weights must be non-negative");
    }
    return value;
}

FileConfig parse_config_file(const fs::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open config file: " + path.string());
    }
    FileConfig cfg;
    std::string raw_line;
    std::size_t line_no = 0;
    while (std::getline(in, raw_line)) {
        ++line_no;
        const std::string_view line = trim(raw_line);
        if (line.empty() || line.front() == '#') continue;
        const std::string where = "config file " + path.string() + " line " +
                                  std::to_string(line_no);
        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw UsageError(where + ": expected key=value");
        }
        const std::string key{trim(line.substr(0, eq))};
        const std::string value{trim(line.substr(eq + 1))};
        if (key == "alpha") {
            cfg.alpha = parse_weight(value, where);
        } else if (key == "beta") {
            cfg.beta = parse_weight(value, where);
        } else if (key == "gamma") {
            cfg.gamma = parse_weight(value, where);
        } else if (key == "backend") {
            if (value != "embedding" && value != "tfidf") {
                throw UsageError(where + ": backend must be 'embedding' or 'tfidf'");
            }
            cfg.backend = value;
        } else if (key == "set_mode") {
            if (value != "normalized" && value != "literal") {
                throw UsageError(where + ": set_mode must be 'normalized' or 'literal'");
            }
            cfg.set_mode = value;
        } else if (key == "numeric_mode") {
            if (value != "literal" && value != "minmax") {
                throw UsageError(where + ": numeric_mode must be 'literal' or 'minmax'");
            }
            cfg.numeric_mode = value;
        } else if (key == "embedding_path") {
            cfg.embedding_path = value;
        } else {
            throw UsageError(where + ": unknown key '" + key + "'");
        }
    }
    return cfg;
}

Weights parse_weights_flag(const std::string& flag) {
    std::vector<double> parts;
    std::size_t start = 0;
    while (start <= flag.size()) {
        const std::size_t comma = flag.find(',', start);
        const std::string_view field =
            std::string_view(flag).substr(start, comma == std::string::npos ? flag.size() - start
                                                                            : comma - start);
        parts.push_back(parse_weight(field, "--weights"));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (parts.size() != 3) {
        throw UsageError("--weights expects three comma-separated values: alpha,beta,gamma");
    }
    if (parts[0] + parts[1] + parts[2] <= 0.0) {
        throw UsageError("--weights must have a positive sum");
    }
    return Weights{parts[0], parts[1], parts[2]}.normalized();
}

Resolved resolve(const Options& opt) {
    Resolved r;
    r.weights = Weights::balanced();

    if (!opt.config_file.empty()) {
        const FileConfig file = parse_config_file(opt.config_file);
        if (file.alpha || file.beta || file.gamma) {
            const Weights raw{file.alpha.value_or(1.0), file.beta.value_or(1.0),
                              file.gamma.value_or(1.0)};
            if (raw.sum() <= 0.0) {
                throw UsageError("config file weights must have a positive sum");
            }
            r.weights = raw.normalized();
        }
        if (file.backend) r.backend = *file.backend == "embedding" ? Backend::Embedding
                                                                   : Backend::TfIdf;
        if (file.set_mode) {
            r.set_mode = *file.set_mode == "literal" ? SetMode::Literal
                                                     : SetMode::Normalized;
        }
        if (file.numeric_mode) {
            r.numeric_mode = *file.numeric_mode == "minmax" ? NumericMode::MinMaxPerPredicate
                                                            : NumericMode::Literal;
        }
        if (file.embedding_path) r.embedding_path = *file.embedding_path;
    }

    if (!opt.embeddings.empty()) {
        r.embedding_path = opt.embeddings;
        if (opt.approach.empty()) r.backend = Backend::Embedding;
    }
    if (!opt.weights.empty()) {
        if (opt.approach == "ablation") {
            throw UsageError("--weights conflicts with --approach ablation, which fixes the "
                             "weights to 0,1.5,1.5");
        }
        r.weights = parse_weights_flag(opt.weights);
    }
    if (!opt.approach.empty()) {
        if (opt.approach == "n1") {
            r.backend = Backend::Embedding;
        } else if (opt.approach == "n2") {
            r.backend = Backend::TfIdf;
        } else {
            r.backend = Backend::Embedding;
            r.weights = Weights{0.0, 1.5, 1.5};
        }
        r.approach_name = opt.approach;
    } else {
        r.approach_name = r.backend == Backend::Embedding ? "n1" : "n2";
    }
    if (!opt.set_mode.empty()) {
        r.set_mode = opt.set_mode == "literal" ? SetMode::Literal : SetMode::Normalized;
    }
    if (!opt.numeric_mode.empty()) {
        r.numeric_mode = opt.numeric_mode == "minmax" ? NumericMode::MinMaxPerPredicate
                                                      : NumericMode::Literal;
    }

    if (r.backend == Backend::Embedding && r.embedding_path.empty()) {
        throw UsageError("the embedding backend requires --embeddings PATH (or embedding_path "
                         "in the config file)");
    }
    if (r.backend == Backend::TfIdf && !opt.embeddings.empty()) {
        throw UsageError("--embeddings is only valid with the embedding backend");
    }
    return r;
}

OutputFormat parse_format(const std::string& format) {
    if (format == "json") return OutputFormat::Json;
    if (format == "csv") return OutputFormat::Csv;
    return OutputFormat::Table;
}

std::string read_file_bytes(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open file: " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string mode_name(SetMode mode) {
    return mode == SetMode::Literal ? "literal" : "normalized";
}

std::string mode_name(NumericMode mode) {
    return mode == NumericMode::MinMaxPerPredicate ? "minmax" : "literal";
}

// Owns the loaded corpus plus whichever vector model the run needs, and
// exposes the SimilarityConfig wired to them.
struct Engine {
    ItemCatalog catalog;
    std::unique_ptr<EmbeddingStore> embeddings;
    std::unique_ptr<TfIdfModel> tfidf;
    NumericScaler scaler;
    SimilarityConfig cfg;
    ConfigEcho echo;
};

Engine make_engine(const Options& opt, const Resolved& resolved) {
    Engine engine;
    engine.catalog = ItemCatalog::load(opt.corpus);

    engine.cfg.weights = resolved.weights;
    engine.cfg.set_mode = resolved.set_mode;
    engine.cfg.numeric_mode = resolved.numeric_mode;
    engine.cfg.word_policy.backend = resolved.backend;
    if (resolved.numeric_mode == NumericMode::MinMaxPerPredicate) {
        engine.scaler = NumericScaler::fit(engine.catalog.items());
        engine.cfg.scaler = &engine.scaler;
    }
    if (resolved.backend == Backend::Embedding) {
        engine.embeddings =
            std::make_unique<EmbeddingStore>(EmbeddingStore::load(resolved.embedding_path));
        engine.cfg.model = engine.embeddings.get();
        engine.echo.embedding_path = resolved.embedding_path;
        engine.echo.embedding_digest = fnv1a64_hex(read_file_bytes(resolved.embedding_path));
    } else {
        engine.tfidf = std::make_unique<TfIdfModel>(TfIdfModel::build(engine.catalog.items()));
        engine.cfg.model = engine.tfidf.get();
    }

    engine.echo.approach = resolved.approach_name;
    engine.echo.backend = engine.cfg.model->backend_name();
    engine.echo.weights = resolved.weights;
    engine.echo.set_mode = mode_name(resolved.set_mode);
    engine.echo.numeric_mode = mode_name(resolved.numeric_mode);
    engine.echo.clamp_negative = engine.cfg.word_policy.clamp_negative;
    return engine;
}

void emit(const std::string& rendered, const Options& opt, std::ostream& out) {
    if (opt.output.empty()) {
        out << rendered;
        return;
    }
    std::ofstream file(opt.output, std::ios::binary);
    if (!file || !(file << rendered) || !file.flush()) {
        throw IoError("cannot write output file: " + opt.output);
    }
}

int cmd_validate(const Options& opt, std::ostream& out) {
    const Resolved resolved = resolve(opt);
    const Engine engine = make_engine(opt, resolved);

    std::vector<ValidationEntry> entries;
    for (const TripleSet& item : engine.catalog.items()) {
        ValidationEntry entry;
        entry.label = item.label;
        entry.triples = item.triples.size();
        entry.qualitative = item.qualitative_count();
        entry.quantitative = item.quantitative_count();
        std::set<std::string> oov;
        const auto scan = [&](const Term& term) {
            for (const std::string& token : term.tokens) {
                ++entry.tokens;
                if (engine.cfg.model->vector_of(token) == nullptr) {
                    ++entry.oov_tokens;
                    oov.insert(token);
                }
            }
        };
        for (const Triple& triple : item.triples) {
            scan(triple.subject);
            scan(triple.predicate);
            if (!triple.object.quantitative()) scan(triple.object.term);
        }
        entry.oov_words.assign(oov.begin(), oov.end());
        entries.push_back(std::move(entry));
    }
    emit(render_validation(entries, engine.echo, parse_format(opt.format)), opt, out);
    return 0;
}

int cmd_matrix(const Options& opt, std::ostream& out) {
    const Resolved resolved = resolve(opt);
    const Engine engine = make_engine(opt, resolved);
    const SimilarityMatrix matrix = similarity_matrix(engine.catalog.items(), engine.cfg);
    emit(render_matrix(matrix, engine.echo, parse_format(opt.format)), opt, out);
    return 0;
}

int cmd_rank(const Options& opt, std::ostream& out) {
    const Resolved resolved = resolve(opt);
    const Engine engine = make_engine(opt, resolved);

    const TripleSet preferences = load_listing_file(opt.profile);
    const UserProfile profile{preferences.label, preferences};
    const RankedList ranking = rank_items(profile, engine.catalog, engine.cfg, opt.top_k);
    emit(render_ranking(ranking, engine.echo, parse_format(opt.format)), opt, out);
    return 0;
}

int cmd_compare(const Options& opt, std::ostream& out) {
    Resolved resolved = resolve(opt);
    if (resolved.embedding_path.empty()) {
        throw UsageError("compare requires --embeddings PATH (or embedding_path in the config "
                         "file): the n1 and ablation columns need word vectors");
    }

    const ItemCatalog catalog = ItemCatalog::load(opt.corpus);
    const EmbeddingStore embeddings = EmbeddingStore::load(resolved.embedding_path);
    const TfIdfModel tfidf = TfIdfModel::build(catalog.items());
    NumericScaler scaler;

    SimilarityConfig base;
    base.weights = resolved.weights;
    base.set_mode = resolved.set_mode;
    base.numeric_mode = resolved.numeric_mode;
    if (resolved.numeric_mode == NumericMode::MinMaxPerPredicate) {
        scaler = NumericScaler::fit(catalog.items());
        base.scaler = &scaler;
    }

    SimilarityConfig n1 = base;
    n1.word_policy.backend = Backend::Embedding;
    n1.model = &embeddings;

    SimilarityConfig n2 = base;
    n2.word_policy.backend = Backend::TfIdf;
    n2.model = &tfidf;

    SimilarityConfig ablation = n1;
    ablation.weights = Weights{0.0, 1.5, 1.5};

    std::vector<ComparisonRow> rows;
    const auto& items = catalog.items();
    for (std::size_t i = 0; i < items.size(); ++i) {
        for (std::size_t j = i + 1; j < items.size(); ++j) {
            ComparisonRow row;
            row.left = items[i].label;
            row.right = items[j].label;
            row.n1 = sim_sets(items[i], items[j], n1);
            row.n2 = sim_sets(items[i], items[j], n2);
            row.ablation = sim_sets(items[i], items[j], ablation);
            rows.push_back(std::move(row));
        }
    }

    ConfigEcho echo;
    echo.approach = "compare";
    echo.backend = "embedding+tfidf";
    echo.weights = resolved.weights;
    echo.set_mode = mode_name(resolved.set_mode);
    echo.numeric_mode = mode_name(resolved.numeric_mode);
    echo.clamp_negative = base.word_policy.clamp_negative;
    echo.embedding_path = resolved.embedding_path;
    echo.embedding_digest = fnv1a64_hex(read_file_bytes(resolved.embedding_path));
    emit(render_comparison(rows, echo, parse_format(opt.format)), opt, out);
    return 0;
}

void add_common_flags(CLI::App* sub, Options& opt, bool allow_approach) {
    if (allow_approach) {
        sub->add_option("--approach", opt.approach,
                        "similarity approach: n1 (embeddings), n2 (tf-idf), ablation "
                        "(embeddings, subject weight 0)")
            ->check(CLI::IsMember({"n1", "n2", "ablation"}));
    }
    sub->add_option("--weights", opt.weights,
                    "subject,predicate,object weights; rescaled to sum to 3");
    sub->add_option("--set-mode", opt.set_mode, "set aggregation: normalized or literal")
        ->check(CLI::IsMember({"normalized", "literal"}));
    sub->add_option("--numeric-mode", opt.numeric_mode,
                    "numeric comparison: literal or minmax")
        ->check(CLI::IsMember({"literal", "minmax"}));
    sub->add_option("--embeddings", opt.embeddings, "word embedding file (text format)");
    sub->add_option("--config", opt.config_file, "key=value config file");
    sub->add_option("--format", opt.format, "output format: table, csv, or json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    sub->add_option("--output", opt.output, "write the result to a file instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"semantic similarity and ranking over triple-set descriptions"};
    app.name("ontosim");
    app.require_subcommand(1);

    Options opt;

    CLI::App* validate = app.add_subcommand(
        "validate", "parse a corpus and report triple counts and vocabulary coverage");
    validate->add_option("corpus", opt.corpus, "directory of *.triples files")->required();
    add_common_flags(validate, opt, true);

    CLI::App* matrix =
        app.add_subcommand("matrix", "pairwise similarity matrix over a corpus");
    matrix->add_option("corpus", opt.corpus, "directory of *.triples files")->required();
    add_common_flags(matrix, opt, true);

    CLI::App* rank = app.add_subcommand("rank", "rank catalog items against a profile");
    rank->add_option("profile", opt.profile, "profile listing file")->required();
    rank->add_option("corpus", opt.corpus, "directory of *.triples files")->required();
    rank->add_option("--top-k", opt.top_k, "number of items to return (default: all)")
        ->check(CLI::PositiveNumber);
    add_common_flags(rank, opt, true);

    CLI::App* compare = app.add_subcommand(
        "compare", "side-by-side n1 / n2 / ablation similarities for every pair");
    compare->add_option("corpus", opt.corpus, "directory of *.triples files")->required();
    add_common_flags(compare, opt, false);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (validate->parsed()) return cmd_validate(opt, out);
        if (matrix->parsed()) return cmd_matrix(opt, out);
        if (rank->parsed()) return cmd_rank(opt, out);
        return cmd_compare(opt, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace ontosim::cli
