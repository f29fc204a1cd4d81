#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <json.hpp>

#include "letterstat/letterstat.hpp"
#include "letterstat/table_io.hpp"
#include "letterstat/utf8.hpp"

namespace letterstat::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string alphabet = "en";
  std::string format;
  std::uint64_t seed = 0;
  std::vector<std::string> inputs;

  std::vector<std::size_t> sizes;
  bool random_subsample = false;
  double alpha = 0.01;
  double min_count = kDefaultMinCount;
  std::size_t restarts = 20;
  std::size_t max_stale = 1;
  std::size_t length_threshold = kDefaultLengthThreshold;
  std::size_t block_size = 0;
  std::size_t length = 1000;
  int order = 1;
  bool vc = false;
  bool yates = false;
  std::string model_dir;
  std::string reference;
  std::string out_dir;
  std::optional<std::size_t> shift;
};

/// One report, renderable in every output format. `columns`/`rows` drive
/// csv and text; `summary` lines precede the table in text mode only.
struct Report {
  json data;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::pair<std::string, std::string>> summary;
  std::string raw_text;  // when set, text mode prints exactly this
};

std::string fixed6(double v) { return io::fixed6(v); }

std::string stat6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::size_t display_width(const std::string& s) { return utf8::decode(s).size(); }

void write_csv(const Report& r, std::ostream& out) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_field(cells[i]);
    out << '\n';
  };
  line(r.columns);
  for (const auto& row : r.rows) line(row);
}

void write_text(const Report& r, std::ostream& out) {
  if (!r.raw_text.empty()) {
    out << r.raw_text;
    return;
  }
  std::size_t key_width = 0;
  for (const auto& [k, v] : r.summary) key_width = std::max(key_width, k.size());
  for (const auto& [k, v] : r.summary) {
    out << k << ':' << std::string(key_width - k.size() + 1, ' ') << v << '\n';
  }
  if (r.columns.empty()) return;
  if (!r.summary.empty()) out << '\n';

  std::vector<std::size_t> width(r.columns.size(), 0);
  for (std::size_t i = 0; i < r.columns.size(); ++i) width[i] = display_width(r.columns[i]);
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], display_width(row[i]));
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      s += cells[i];
      if (i + 1 < cells.size()) s += std::string(width[i] - display_width(cells[i]) + 2, ' ');
    }
    out << s << '\n';
  };
  line(r.columns);
  for (const auto& row : r.rows) line(row);
}

void write_report(const Report& r, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << r.data.dump(2) << '\n';
  } else if (format == "csv") {
    write_csv(r, out);
  } else {
    write_text(r, out);
  }
}

/// Two-column csv/text view of a flat report.
void add_field(Report& r, const std::string& key, const std::string& value) {
  if (r.columns.empty()) r.columns = {"field", "value"};
  r.rows.push_back({key, value});
}

class Session {
 public:
  Session(Config cfg, std::istream& in, std::ostream& err)
      : cfg_(std::move(cfg)), in_(in), err_(err) {}

  const Config& cfg() const { return cfg_; }
  std::ostream& err() { return err_; }

  const AlphabetRef& alphabet() {
    if (!alphabet_) alphabet_ = resolve_alphabet(cfg_.alphabet);
    return alphabet_;
  }

  std::vector<std::string> input_names() const {
    return cfg_.inputs.empty() ? std::vector<std::string>{"-"} : cfg_.inputs;
  }

  std::string read(const std::string& path) {
    if (path == "-") {
      if (!stdin_) {
        std::ostringstream buf;
        buf << in_.rdbuf();
        stdin_ = buf.str();
      }
      return *stdin_;
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error("cannot read " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
  }

  std::vector<LetterSequence> sequences() {
    std::vector<LetterSequence> out;
    for (const auto& name : input_names()) out.push_back(normalize(read(name), alphabet(), name));
    return out;
  }

  /// All inputs joined into one sequence.
  LetterSequence joined() {
    auto parts = sequences();
    LetterSequence seq{alphabet(), {}, {}};
    for (const auto& p : parts) {
      seq.symbols.insert(seq.symbols.end(), p.symbols.begin(), p.symbols.end());
      seq.source.discarded += p.source.discarded;
      seq.source.label += (seq.source.label.empty() ? "" : "+") + p.source.label;
    }
    return seq;
  }

  WordSequence words() {
    WordSequence all{alphabet(), {}, {}};
    for (const auto& name : input_names()) {
      auto w = tokenize_words(read(name), alphabet(), name);
      all.words.insert(all.words.end(), w.words.begin(), w.words.end());
    }
    return all;
  }

  FrequencyTable letter_table() {
    FrequencyTable t = FrequencyTable::zeros(alphabet());
    for (const auto& s : sequences()) t = merge(t, count_letters(s));
    return t;
  }

  DigramTable digram_table() {
    DigramTable t = DigramTable::zeros(alphabet());
    for (const auto& s : sequences()) t = merge(t, count_digrams(s));
    return t;
  }

  LetterSequence require_nonempty(LetterSequence s) {
    if (s.empty()) throw Error("input contains no letters of alphabet '" + alphabet()->name() + "'");
    return s;
  }

  /// Model from --model, else trained on --reference.
  LanguageModel model() {
    const bool has_model = !cfg_.model_dir.empty();
    const bool has_ref = !cfg_.reference.empty();
    if (has_model == has_ref) throw UsageError("exactly one of --model or --reference is required");
    if (has_model) return load_model(cfg_.model_dir, alphabet());
    return LanguageModel::train(
        require_nonempty(normalize(read(cfg_.reference), alphabet(), cfg_.reference)));
  }

 private:
  Config cfg_;
  std::istream& in_;
  std::ostream& err_;
  AlphabetRef alphabet_;
  std::optional<std::string> stdin_;
};

std::string letter(const Alphabet& a, Letter l) { return utf8::encode(a.symbol(l)); }

void require_inputs(const Session& s, std::size_t n, const char* what) {
  if (s.cfg().inputs.size() != n) {
    throw UsageError(std::string(what) + " takes exactly " + std::to_string(n) + " input files");
  }
}

json profile_json(const VCProfile& p) {
  json j{{"vowels", p.vowel_count},
         {"consonants", p.consonant_count},
         {"vowel_share", p.vowel_share},
         {"vowels_per_100", nullptr}};
  if (p.vowels_per_100) j["vowels_per_100"] = *p.vowels_per_100;
  return j;
}

// ---- subcommands ---------------------------------------------------------

Report cmd_count(Session& s) {
  const auto t = s.letter_table();
  const auto order = rank_order(t);
  std::vector<std::size_t> rank(t.counts.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i + 1;

  Report r;
  r.data = io::table_json(t);
  r.columns = {"letter", "count", "proportion", "rank"};
  for (Letter l = 0; l < t.counts.size(); ++l) {
    r.rows.push_back({letter(*t.alphabet, l), std::to_string(t.counts[l]), fixed6(t.proportion(l)),
                      std::to_string(rank[l])});
  }
  return r;
}

Report cmd_digrams(Session& s) {
  const auto t = s.digram_table();
  const std::size_t n = t.alphabet->size();
  Report r;
  r.data = io::digram_json(t);
  r.columns = {"first", "second", "count", "proportion"};
  for (std::size_t k = 0; k < t.counts.size(); ++k) {
    if (t.counts[k] == 0) continue;
    r.rows.push_back({letter(*t.alphabet, static_cast<Letter>(k / n)),
                      letter(*t.alphabet, static_cast<Letter>(k % n)), std::to_string(t.counts[k]),
                      fixed6(static_cast<double>(t.counts[k]) / static_cast<double>(t.total))});
  }
  return r;
}

Report cmd_compare(Session& s) {
  require_inputs(s, 2, "compare");
  const auto seqs = s.sequences();
  const auto a = count_letters(seqs[0]);
  const auto b = count_letters(seqs[1]);
  const auto d = compare_tables(a, b);
  Report r;
  r.data = {{"a", {{"input", seqs[0].source.label}, {"letters", a.total}}},
            {"b", {{"input", seqs[1].source.label}, {"letters", b.total}}},
            {"total_variation", d.total_variation},
            {"chi_square", d.chi_square},
            {"degrees_of_freedom_max", a.counts.size() - 1},
            {"rank_correlation", d.rank_correlation}};
  add_field(r, "total_variation", fixed6(d.total_variation));
  add_field(r, "chi_square", stat6(d.chi_square));
  add_field(r, "rank_correlation", fixed6(d.rank_correlation));
  return r;
}

Report cmd_stability(Session& s) {
  if (s.cfg().sizes.empty()) throw UsageError("stability requires --sizes");
  const auto seq = s.require_nonempty(s.joined());
  const auto curve = s.cfg().random_subsample
                         ? stability_curve_sampled(seq, s.cfg().sizes, s.cfg().seed)
                         : stability_curve(seq, s.cfg().sizes);
  Report r;
  r.data = {{"letters", seq.size()},
            {"method", s.cfg().random_subsample ? "random" : "prefix"},
            {"points", json::array()}};
  if (s.cfg().random_subsample) r.data["seed"] = s.cfg().seed;
  r.columns = {"size", "total_variation", "chi_square", "rank_correlation"};
  for (const auto& p : curve) {
    r.data["points"].push_back({{"size", p.size},
                                {"total_variation", p.distance.total_variation},
                                {"chi_square", p.distance.chi_square},
                                {"rank_correlation", p.distance.rank_correlation}});
    r.rows.push_back({std::to_string(p.size), fixed6(p.distance.total_variation),
                      stat6(p.distance.chi_square), fixed6(p.distance.rank_correlation)});
  }
  return r;
}

Report cmd_positions(Session& s) {
  const auto ps = positional_stats(s.words());
  const Alphabet& a = *s.alphabet();
  Report r;
  r.data = {{"words", ps.words}, {"letters", json::array()}};
  r.columns = {"letter", "initial", "second", "penultimate", "final", "doubles"};
  for (Letter l = 0; l < a.size(); ++l) {
    r.data["letters"].push_back({{"letter", letter(a, l)},
                                 {"initial", ps.initial.counts[l]},
                                 {"second", ps.second.counts[l]},
                                 {"penultimate", ps.penultimate.counts[l]},
                                 {"final", ps.final.counts[l]},
                                 {"doubles", ps.doubles[l]}});
    r.rows.push_back({letter(a, l), std::to_string(ps.initial.counts[l]),
                      std::to_string(ps.second.counts[l]), std::to_string(ps.penultimate.counts[l]),
                      std::to_string(ps.final.counts[l]), std::to_string(ps.doubles[l])});
  }
  r.summary = {{"words", std::to_string(ps.words)}};
  return r;
}

Report cmd_style_vc(Session& s) {
  Report r;
  r.data = {{"profiles", json::array()}};
  r.columns = {"input", "vowels", "consonants", "vowel_share", "vowels_per_100"};
  for (const auto& seq : s.sequences()) {
    const auto p = vc_profile(seq);
    auto j = profile_json(p);
    j["input"] = seq.source.label;
    r.data["profiles"].push_back(j);
    r.rows.push_back({seq.source.label, std::to_string(p.vowel_count),
                      std::to_string(p.consonant_count), fixed6(p.vowel_share),
                      p.vowels_per_100 ? fixed6(*p.vowels_per_100) : ""});
  }
  return r;
}

Report cmd_style_alberti(Session& s) {
  const auto p = vc_profile(s.joined());
  const auto v = alberti_test(p);
  Report r;
  r.data = profile_json(p);
  r.data["share"] = v.share.to_string();
  r.data["poetry_threshold"] = kPoetryThreshold.to_string();
  r.data["orator_threshold"] = kOratorThreshold.to_string();
  r.data["above_poetry_threshold"] = v.above_poetry_threshold;
  r.data["above_orator_threshold"] = v.above_orator_threshold;
  r.data["label"] = std::string(to_string(v.label));
  add_field(r, "vowels", std::to_string(p.vowel_count));
  add_field(r, "consonants", std::to_string(p.consonant_count));
  add_field(r, "share", v.share.to_string());
  add_field(r, "vowel_share", fixed6(v.vowel_share));
  add_field(r, "poetry_threshold", kPoetryThreshold.to_string());
  add_field(r, "orator_threshold", kOratorThreshold.to_string());
  add_field(r, "label", std::string(to_string(v.label)));
  return r;
}

Report cmd_style_compare(Session& s) {
  require_inputs(s, 2, "style compare");
  const auto seqs = s.sequences();
  const auto a = vc_profile(seqs[0]);
  const auto b = vc_profile(seqs[1]);
  const auto t = two_sample_proportion_test(a, b);
  Report r;
  auto ja = profile_json(a);
  auto jb = profile_json(b);
  ja["input"] = seqs[0].source.label;
  jb["input"] = seqs[1].source.label;
  r.data = {{"a", ja}, {"b", jb}, {"z", t.z}, {"p_value", t.p_value}};
  add_field(r, "vowel_share_a", fixed6(a.vowel_share));
  add_field(r, "vowel_share_b", fixed6(b.vowel_share));
  add_field(r, "z", stat6(t.z));
  add_field(r, "p_value", stat6(t.p_value));
  return r;
}

Report cmd_style_compass(Session& s) {
  std::vector<VCProfile> samples;
  for (const auto& seq : s.sequences()) {
    if (s.cfg().block_size == 0) {
      samples.push_back(vc_profile(seq));
    } else {
      const auto blocks = block_profiles(seq, s.cfg().block_size);
      samples.insert(samples.end(), blocks.begin(), blocks.end());
    }
  }
  const auto v = compass_of_variation(samples);
  Report r;
  r.data = {{"samples", v.sample_count},
            {"block_size", s.cfg().block_size},
            {"minimum", v.minimum},
            {"median", v.median},
            {"maximum", v.maximum},
            {"vowels_per_100", json::array()}};
  for (const auto& p : samples) r.data["vowels_per_100"].push_back(*p.vowels_per_100);
  add_field(r, "samples", std::to_string(v.sample_count));
  add_field(r, "minimum", fixed6(v.minimum));
  add_field(r, "median", fixed6(v.median));
  add_field(r, "maximum", fixed6(v.maximum));
  return r;
}

Report cmd_lipogram(Session& s) {
  const auto reference = s.model().unigram();
  const auto observed = s.letter_table();
  const auto flags = lipogram_scan(observed, reference, s.cfg().alpha);
  const Alphabet& a = *s.alphabet();
  const double threshold = s.cfg().alpha / static_cast<double>(a.size());
  Report r;
  r.data = {{"alpha", s.cfg().alpha},
            {"per_letter_threshold", threshold},
            {"letters", observed.total},
            {"flags", json::array()}};
  r.columns = {"letter", "observed", "expected", "p_value"};
  for (const auto& f : flags) {
    r.data["flags"].push_back({{"letter", letter(a, f.letter)},
                               {"observed", f.observed},
                               {"expected", f.expected},
                               {"p_value", f.p_value}});
    r.rows.push_back({letter(a, f.letter), std::to_string(f.observed), stat6(f.expected),
                      stat6(f.p_value)});
  }
  r.summary = {{"letters", std::to_string(observed.total)},
               {"per_letter_threshold", stat6(threshold)},
               {"flagged", std::to_string(flags.size())}};
  return r;
}

Report cmd_entropy(Session& s) {
  const auto uni = s.letter_table();
  const auto di = s.digram_table();
  const auto e = entropy_estimates(uni, di);
  Report r;
  r.data = {{"letters", uni.total}, {"h0", e.h0}, {"h1", e.h1}, {"h2", e.h2}};
  add_field(r, "h0", fixed6(e.h0));
  add_field(r, "h1", fixed6(e.h1));
  add_field(r, "h2", fixed6(e.h2));
  return r;
}

Report cmd_generate(Session& s) {
  const Config& c = s.cfg();
  std::string text;
  if (c.vc) {
    const auto t = fit_transitions(to_vc_sequence(s.joined()));
    text = render(generate(t, c.length, c.seed));
  } else {
    if (c.order != 0 && c.order != 1) throw UsageError("--order must be 0 or 1");
    const auto model = c.model_dir.empty() ? LanguageModel::train(s.require_nonempty(s.joined()))
                                           : load_model(c.model_dir, s.alphabet());
    text = render(generate(model, c.length, c.seed, c.order));
  }
  Report r;
  r.data = {{"kind", c.vc ? "vc" : "letters"},
            {"order", c.vc ? 1 : c.order},
            {"length", c.length},
            {"seed", c.seed},
            {"sequence", text}};
  r.columns = {"sequence"};
  r.rows = {{text}};
  r.raw_text = text + "\n";
  return r;
}

Report cmd_zipf(Session& s) {
  const auto rf = word_rank_frequency(s.words());
  const Alphabet& a = *rf.alphabet;
  Report r;
  r.data = {{"min_count", s.cfg().min_count}, {"fit", nullptr}, {"ranks", json::array()}};
  r.columns = {"rank", "word", "count"};
  for (const auto& e : rf.entries) {
    const std::string w = render(a, e.word);
    r.data["ranks"].push_back({{"rank", e.rank}, {"word", w}, {"count", e.count}});
    r.rows.push_back({std::to_string(e.rank), w, std::to_string(e.count)});
  }
  try {
    const auto fit = fit_power_law(rf, s.cfg().min_count);
    r.data["fit"] = {{"exponent", fit.exponent},
                     {"intercept", fit.intercept},
                     {"r_squared", fit.r_squared},
                     {"points_used", fit.points_used}};
    r.summary = {{"exponent", fixed6(fit.exponent)},
                 {"intercept", fixed6(fit.intercept)},
                 {"r_squared", fixed6(fit.r_squared)},
                 {"points_used", std::to_string(fit.points_used)}};
  } catch (const Error& e) {
    s.err() << "warning: no power-law fit: " << e.what() << '\n';
  }
  return r;
}

Report cmd_solve(Session& s) {
  const Config& c = s.cfg();
  const auto model = s.model();
  std::string text;
  for (const auto& name : s.input_names()) text += s.read(name) + "\n";
  const auto cipher = parse_cryptogram(text, s.alphabet(), std::nullopt, s.input_names().front());
  SolverOptions opts;
  opts.restarts = c.restarts;
  opts.max_stale = c.max_stale;
  opts.seed = c.seed;
  opts.length_threshold = c.length_threshold;
  const auto rep = hill_climb_solve(cipher, model, opts);

  Report r;
  r.data = {{"length", cipher.size()},
            {"key", rep.best_key.to_string()},
            {"plaintext", render(rep.plaintext)},
            {"score", rep.best_score},
            {"seed_score", rep.seed_score},
            {"restarts", rep.restarts_run},
            {"best_restart", rep.best_restart},
            {"seed", c.seed},
            {"length_warning", nullptr}};
  add_field(r, "length", std::to_string(cipher.size()));
  add_field(r, "key", rep.best_key.to_string());
  add_field(r, "score", stat6(rep.best_score));
  add_field(r, "seed_score", stat6(rep.seed_score));
  add_field(r, "plaintext", render(rep.plaintext));
  if (rep.length_warning) {
    r.data["length_warning"] = {{"length", rep.length_warning->length},
                                {"threshold", rep.length_warning->threshold}};
    add_field(r, "length_warning",
              "cryptogram of " + std::to_string(rep.length_warning->length) +
                  " symbols is shorter than " + std::to_string(rep.length_warning->threshold));
    s.err() << "warning: cryptogram has " << rep.length_warning->length
            << " symbols; frequency analysis is unreliable below "
            << rep.length_warning->threshold << '\n';
  }
  return r;
}

Report cmd_markov_test(Session& s) {
  const auto seq = s.joined();
  const auto t = fit_transitions(to_vc_sequence(seq));
  const auto m = independence_test(t, s.cfg().yates);
  Report r;
  r.data = {{"letters", seq.size()},
            {"chi_square", m.chi_square},
            {"df", m.degrees_of_freedom},
            {"p_value", m.p_value},
            {"p_vc", m.p_vc},
            {"p_cv", m.p_cv},
            {"p_vv", m.p_vv},
            {"p_cc", m.p_cc},
            {"continuity_corrected", m.continuity_corrected},
            {"transitions",
             {{"vv", t.n[0][0]}, {"vc", t.n[0][1]}, {"cv", t.n[1][0]}, {"cc", t.n[1][1]}}}};
  add_field(r, "chi_square", stat6(m.chi_square));
  add_field(r, "df", std::to_string(m.degrees_of_freedom));
  add_field(r, "p_value", stat6(m.p_value));
  add_field(r, "p_vc", fixed6(m.p_vc));
  add_field(r, "p_cv", fixed6(m.p_cv));
  add_field(r, "p_vv", fixed6(m.p_vv));
  add_field(r, "p_cc", fixed6(m.p_cc));
  return r;
}

Report cmd_train_model(Session& s) {
  if (s.cfg().out_dir.empty()) throw UsageError("train-model requires --out");
  const auto model = LanguageModel(s.letter_table(), s.digram_table());
  if (model.unigram().total == 0) throw Error("train-model: input contains no letters");
  save_model(model, s.cfg().out_dir);
  Report r;
  r.data = {{"out", s.cfg().out_dir},
            {"alphabet", s.alphabet()->name()},
            {"letters", model.unigram().total},
            {"pairs", model.digram().total}};
  add_field(r, "out", s.cfg().out_dir);
  add_field(r, "letters", std::to_string(model.unigram().total));
  add_field(r, "pairs", std::to_string(model.digram().total));
  return r;
}

Report cmd_encrypt(Session& s) {
  const auto key = s.cfg().shift ? SubstitutionKey::shift(s.alphabet(), *s.cfg().shift)
                                 : SubstitutionKey::random(s.alphabet(), s.cfg().seed);
  const std::string cipher = render(encrypt(s.joined(), key));
  Report r;
  r.data = {{"key", key.to_string()}, {"ciphertext", cipher}};
  r.columns = {"key", "ciphertext"};
  r.rows = {{key.to_string(), cipher}};
  r.raw_text = cipher + "\n";
  return r;
}

struct Command {
  CLI::App* app;
  std::string default_format;
  std::function<Report(Session&)> handler;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Letter-frequency statistics, stylometry and substitution-cipher analysis",
               "letterstat"};
  app.require_subcommand(1);
  Config cfg;
  std::vector<Command> commands;

  auto add = [&](CLI::App* parent, const std::string& name, const std::string& help,
                 std::string default_format, std::function<Report(Session&)> handler) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->add_option("--alphabet", cfg.alphabet, "Built-in alphabet name or alphabet file")
        ->capture_default_str();
    sub->add_option("--format", cfg.format, "Output format (default: " + default_format + ")")
        ->check(CLI::IsMember({"csv", "json", "text"}));
    sub->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    sub->add_option("inputs", cfg.inputs, "Input files; '-' or none reads standard input");
    commands.push_back({sub, std::move(default_format), std::move(handler)});
    return sub;
  };
  auto model_options = [&](CLI::App* sub) {
    sub->add_option("--model", cfg.model_dir, "Model directory written by train-model");
    sub->add_option("--reference", cfg.reference, "Reference corpus to train a model from");
  };

  add(&app, "count", "Letter counts, proportions and ranks", "csv", cmd_count);
  add(&app, "digrams", "Ordered letter-pair counts", "csv", cmd_digrams);
  add(&app, "compare", "Distance between the letter tables of two inputs", "json", cmd_compare);
  auto* stability = add(&app, "stability", "Distance of samples to the full table", "csv",
                        cmd_stability);
  stability->add_option("--sizes", cfg.sizes, "Sample sizes, comma separated")
      ->delimiter(',')
      ->allow_extra_args(false);
  stability->add_flag("--random-subsample", cfg.random_subsample,
                      "Sample positions at random instead of taking prefixes");
  add(&app, "positions", "Letter counts by position within words", "csv", cmd_positions);

  CLI::App* style = app.add_subcommand("style", "Vowel/consonant stylometry");
  style->require_subcommand(1);
  add(style, "vc", "Vowel and consonant counts per input", "csv", cmd_style_vc);
  add(style, "alberti", "Vowel share against the 7/16 and 3/7 thresholds", "json",
      cmd_style_alberti);
  add(style, "compare", "Two-proportion test of vowel shares", "json", cmd_style_compare);
  auto* compass = add(style, "compass", "Range of vowels per 100 consonants", "json",
                      cmd_style_compass);
  compass->add_option("--block-size", cfg.block_size, "Cut inputs into blocks of this many letters");

  auto* lipogram = add(&app, "lipogram", "Letters significantly rarer than the reference", "csv",
                       cmd_lipogram);
  lipogram->add_option("--alpha", cfg.alpha, "Family-wise significance level")
      ->capture_default_str();
  model_options(lipogram);
  add(&app, "entropy", "Zero-, first- and second-order entropy in bits per letter", "json",
      cmd_entropy);

  auto* gen = add(&app, "generate", "Sample text from a letter model", "text", cmd_generate);
  gen->add_option("--model", cfg.model_dir, "Model directory; otherwise trained on the inputs");
  gen->add_option("--length", cfg.length, "Number of symbols")->capture_default_str();
  gen->add_option("--order", cfg.order, "0 = independent letters, 1 = digram chain")
      ->capture_default_str();
  gen->add_flag("--vc", cfg.vc, "Generate a vowel/consonant chain fitted to the inputs");

  auto* zipf = add(&app, "zipf", "Word rank-frequency table and power-law fit", "csv", cmd_zipf);
  zipf->add_option("--min-count", cfg.min_count, "Smallest count used in the fit")
      ->capture_default_str();

  auto* solve = add(&app, "solve", "Break a monoalphabetic substitution cipher", "json", cmd_solve);
  model_options(solve);
  solve->add_option("--restarts", cfg.restarts, "Hill-climbing restarts")->capture_default_str();
  solve->add_option("--max-stale", cfg.max_stale, "Sweeps without improvement before stopping")
      ->capture_default_str();
  solve->add_option("--length-threshold", cfg.length_threshold,
                    "Warn for cryptograms shorter than this")
      ->capture_default_str();

  CLI::App* markov = app.add_subcommand("markov", "Vowel/consonant chain analysis");
  markov->require_subcommand(1);
  auto* mtest = add(markov, "test", "Chi-square test of independence of successive letters",
                    "json", cmd_markov_test);
  mtest->add_flag("--yates", cfg.yates, "Apply the continuity correction");

  auto* train = add(&app, "train-model", "Write unigram and digram tables for a corpus", "text",
                    cmd_train_model);
  train->add_option("--out", cfg.out_dir, "Output directory");
  auto* enc = add(&app, "encrypt", "Encrypt with a random (seeded) or shift key", "text",
                  cmd_encrypt);
  enc->add_option("--shift", cfg.shift, "Use a shift key instead of a random one");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Command* chosen = nullptr;
  for (const auto& c : commands) {
    if (c.app->parsed()) chosen = &c;
  }
  if (chosen == nullptr) {
    err << "error: no command given\n";
    return kExitUsage;
  }

  try {
    Session session(cfg, in, err);
    const Report report = chosen->handler(session);
    write_report(report, cfg.format.empty() ? chosen->default_format : cfg.format, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDataError;
  }
  return kExitOk;
}

}  // namespace letterstat::cli
