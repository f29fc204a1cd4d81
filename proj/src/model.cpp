#include "letterstat/model.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "letterstat/error.hpp"
#include "letterstat/table_io.hpp"

namespace letterstat {

LanguageModel::LanguageModel(FrequencyTable unigram, DigramTable digram, double smoothing)
    : unigram_(std::move(unigram)), digram_(std::move(digram)), smoothing_(smoothing) {
  require_same_alphabet(*unigram_.alphabet, *digram_.alphabet, "language model");
  if (!(smoothing_ > 0.0) || !std::isfinite(smoothing_)) {
    throw Error("language model: smoothing must be positive");
  }
  const std::size_t n = unigram_.alphabet->size();
  const double lambda_mass = smoothing_ * static_cast<double>(n);
  log_probs_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const double denom = static_cast<double>(unigram_.counts[i]) + lambda_mass;
    for (std::size_t j = 0; j < n; ++j) {
      const double num = static_cast<double>(digram_.counts[i * n + j]) + smoothing_;
      log_probs_[i * n + j] = std::log(num / denom);
    }
  }
}

LanguageModel LanguageModel::train(const LetterSequence& corpus, double smoothing) {
  return LanguageModel(count_letters(corpus), count_digrams(corpus), smoothing);
}

LanguageModel LanguageModel::uniform(AlphabetRef alphabet, double smoothing) {
  return LanguageModel(FrequencyTable::zeros(alphabet), DigramTable::zeros(alphabet), smoothing);
}

double score_counts(std::span<const std::uint64_t> pair_counts, const LanguageModel& model) {
  const auto lp = model.log_probs();
  double total = 0.0;
  for (std::size_t k = 0; k < pair_counts.size(); ++k) {
    if (pair_counts[k] != 0) total += static_cast<double>(pair_counts[k]) * lp[k];
  }
  return total;
}

double score(const LetterSequence& seq, const LanguageModel& model) {
  if (seq.empty()) throw Error("score: empty sequence");
  require_same_alphabet(*seq.alphabet, *model.alphabet(), "score");
  return score_counts(reference::count_digrams(seq).counts, model);
}

namespace {

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error("cannot read " + p.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw Error("cannot write " + p.string());
  out << text;
  if (!out) throw Error("write failed: " + p.string());
}

}  // namespace

void save_model(const LanguageModel& model, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error("cannot create " + dir.string() + ": " + ec.message());
  write_file(dir / "unigram.csv", io::unigram_model_csv(model.unigram()));
  write_file(dir / "digram.csv", io::digram_model_csv(model.digram()));
}

LanguageModel load_model(const std::filesystem::path& dir, AlphabetRef alphabet,
                         double smoothing) {
  auto uni = io::parse_unigram_csv(read_file(dir / "unigram.csv"), alphabet);
  auto di = io::parse_digram_csv(read_file(dir / "digram.csv"), alphabet);
  return LanguageModel(std::move(uni), std::move(di), smoothing);
}

}  // namespace letterstat
