#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "panto/rational.hpp"

namespace panto {

enum class Letter : std::uint8_t { a = 0, b = 1 };

constexpr Letter other(Letter x) { return x == Letter::a ? Letter::b : Letter::a; }
constexpr char to_char(Letter x) { return x == Letter::a ? 'a' : 'b'; }
constexpr std::size_t index_of(Letter x) { return static_cast<std::size_t>(x); }
std::optional<Letter> letter_from_char(char c);

/// Finite word over {a, b}; 0-based indexing.
class Word {
  public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    /// Throws std::invalid_argument on characters outside {a, b}.
    static Word from_string(std::string_view text);

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    void push_back(Letter x) { letters_.push_back(x); }
    void reserve(std::size_t n) { letters_.reserve(n); }

    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    std::string str() const;

    friend bool operator==(const Word&, const Word&) = default;

  private:
    std::vector<Letter> letters_;
};

std::size_t count_occurrences(const Word& w, Letter alpha);

/// Why validation rejected an image pair. Shape failures (the word-level
/// preconditions) are distinguished from the combinatorial conditions so the
/// CLI can report them as usage errors rather than rejections.
enum class ValidationFailure {
    none,
    empty_image,        // shape
    unequal_lengths,    // shape
    lambda_too_small,   // shape: lambda must be >= 2
    occurrence_counts,  // |sigma(a)|_alpha != |sigma(b)|_alpha
    missing_letter,     // some letter never occurs in the images
    delta_condition,    // weighted-count difference != 1
    not_prolongable,    // neither image starts with its own letter
};

std::string_view failure_name(ValidationFailure f);

struct ValidationReport {
    Word image_a;
    Word image_b;
    int lambda = 0;
    int lambda_a = 0;
    int lambda_b = 0;
    // Position-weighted occurrence counts of 'a' in sigma(a) / sigma(b); their
    // difference is the accepted pairs' defining condition (must equal 1).
    std::int64_t delta1_a_in_sigma_a = 0;
    std::int64_t delta1_a_in_sigma_b = 0;
    bool prolongable_a = false;
    bool prolongable_b = false;
    bool accepted = false;
    ValidationFailure failure = ValidationFailure::none;

    bool shape_failure() const {
        return failure == ValidationFailure::empty_image ||
               failure == ValidationFailure::unequal_lengths ||
               failure == ValidationFailure::lambda_too_small;
    }
    std::string message() const;
};

/// Checks the standing hypotheses on an image pair. Rejection is an outcome,
/// not an error; the report names the first failing condition.
ValidationReport validate(const Word& image_a, const Word& image_b);

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Splits substitution text into the two raw images without validating the
/// combinatorial conditions. Accepts `a:<word>,b:<word>` or the JSON object
/// form. Throws ParseError on syntax errors (position reported) and on
/// empty or non-{a,b} images.
std::pair<Word, Word> parse_image_pair(std::string_view text);

struct ValidationError : std::runtime_error {
    explicit ValidationError(ValidationReport r) : std::runtime_error(r.message()), report(std::move(r)) {}
    ValidationReport report;
};

/// A validated uniform substitution on {a, b}.
class Substitution {
  public:
    /// Accepts `a:<word>,b:<word>` or a JSON object {"a": "...", "b": "..."}.
    /// Throws ParseError (syntax, with position) or ValidationError.
    static Substitution parse(std::string_view text);

    /// Throws ValidationError when the pair fails validation.
    static Substitution from_images(Word image_a, Word image_b);

    const Word& image(Letter x) const { return x == Letter::a ? image_a_ : image_b_; }
    int lambda() const { return report_.lambda; }
    int letter_count(Letter x) const {
        return x == Letter::a ? report_.lambda_a : report_.lambda_b;
    }
    /// Letter whose image starts with itself; ties broken toward 'a'.
    Letter start_letter() const { return start_; }
    const ValidationReport& report() const { return report_; }

    std::string str() const;

  private:
    Substitution(Word a, Word b, ValidationReport r, Letter start)
        : image_a_(std::move(a)), image_b_(std::move(b)), report_(std::move(r)), start_(start) {}

    Word image_a_;
    Word image_b_;
    ValidationReport report_;
    Letter start_;
};

/// Level-ell position-weighted occurrence count: the positions k of alpha in
/// sigma(beta) summed with weight (lambda-k-1)^ell / ell!. Level 0 reduces to
/// the plain letter count.
Rational delta_level(const Substitution& sub, Letter alpha, Letter beta, int ell);

/// Level-1 count computed the other way: total 'a's over the strict prefixes
/// of sigma(beta). Must agree with delta_level(sub, a, beta, 1) exactly.
std::int64_t delta1_via_prefixes(const Substitution& sub, Letter beta);

/// First n letters of the fixed point u = sigma(u) grown from start_letter().
Word fixed_point_prefix(const Substitution& sub, std::size_t n);

/// Least index below search_bound where the fixed point carries alpha.
std::optional<std::size_t> first_occurrence(const Substitution& sub, Letter alpha,
                                            std::size_t search_bound);

/// Cache of the level quadruples (d_a_in_a, d_b_in_a, d_a_in_b, d_b_in_b).
/// Extension is not thread-safe; finished tables are safe to read concurrently.
class DeltaTable {
  public:
    explicit DeltaTable(const Substitution& sub, int levels = 0);

    void ensure(int level);
    int max_level() const { return static_cast<int>(rows_.size()) - 1; }
    int lambda() const { return sub_.lambda(); }

    const Rational& delta(Letter alpha, Letter beta, int level) const;

  private:
    Substitution sub_;
    std::vector<std::array<Rational, 4>> rows_;
};

}  // namespace panto
