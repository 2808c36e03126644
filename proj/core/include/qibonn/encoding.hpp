#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qibonn {

/// Candidate bitstring; one entry per bit, most-significant bit first
/// within each dimension's segment.
using BitString = std::vector<std::uint8_t>;

std::string bits_to_string(const BitString& bits);
BitString bits_from_string(const std::string& s);

enum class DimKind {
  Continuous,
  LogContinuous,
  IntegerRange,
  CategoricalSet,
  BinaryFlag,
};

std::string to_string(DimKind kind);
DimKind dim_kind_from_string(const std::string& s);

/// One dimension of the search space: a named range (or choice set) plus
/// the number of bits its segment occupies in the candidate bitstring.
struct DimensionSpec {
  std::string name;
  DimKind kind = DimKind::Continuous;
  double lo = 0.0;
  double hi = 1.0;
  std::vector<double> choices;  // CategoricalSet only, ordered
  int bpp = 1;

  static DimensionSpec continuous(std::string name, double lo, double hi,
                                  int bpp);
  static DimensionSpec log_continuous(std::string name, double lo, double hi,
                                      int bpp);
  static DimensionSpec integer_range(std::string name, int lo, int hi,
                                     int bpp);
  static DimensionSpec categorical(std::string name,
                                   std::vector<double> choices, int bpp);
  static DimensionSpec binary_flag(std::string name);

  /// Throws ConfigError if the declaration is inconsistent.
  void validate() const;

  std::uint64_t code_count() const { return std::uint64_t{1} << bpp; }
  std::uint64_t max_code() const { return code_count() - 1; }

  /// Value of this dimension at integer code v in [0, 2^bpp - 1]: the
  /// linear map lo + v/(2^bpp-1) * (hi - lo), applied in log10 space for
  /// LogContinuous, rounded half-up for IntegerRange, and mapped onto the
  /// choice index for CategoricalSet. Endpoints are exact.
  double decode_code(std::uint64_t v) const;

  /// Nearest code whose decode_code() is closest to `value`; ties take the
  /// lower code. Throws std::domain_error if `value` is outside the
  /// declared range (or not a member, for CategoricalSet).
  std::uint64_t encode_value(double value) const;
};

/// A decoded candidate: the feature mask plus the six network
/// hyperparameters tuned by the search.
struct HyperparamVector {
  std::vector<std::uint8_t> feature_mask;
  double dropout = 0.0;
  int hidden_width = 8;
  double learning_rate = 1e-3;
  int batch_size = 32;
  double weight_decay = 0.0;
  int n_hidden_layers = 1;

  int mask_popcount() const;

  /// Canonical byte representation; equal vectors produce equal strings.
  /// Used for deterministic per-candidate seeding and in traces.
  std::string canonical_repr() const;
};

/// Names the decoder expects for the architecture block, in layout order.
extern const std::vector<std::string> kArchDimNames;

/// Declarative search space: n_feat binary feature-mask dimensions followed
/// by the six architecture dimensions (identified by name, any order).
struct SpaceSpec {
  int n_feat = 0;
  std::vector<DimensionSpec> dims;

  static SpaceSpec make(int n_feat, std::vector<DimensionSpec> dims);

  int total_bits() const;
  int bit_offset(std::size_t dim_index) const;
  const DimensionSpec& dim_named(const std::string& name) const;

  void validate() const;
};

/// The default search space: n_feat one-bit mask flags, then
///   dropout          continuous  [0, 0.5]       8 bits
///   hidden_width     integer     [8, 64]        6 bits
///   learning_rate    log         [1e-4, 1e-1]   8 bits
///   batch_size       categorical {32..384}      3 bits
///   weight_decay     log         [1e-6, 1e-2]   8 bits
///   n_hidden_layers  integer     [1, 4]         2 bits
SpaceSpec default_space(int n_feat);

/// Decode a candidate bitstring into a concrete configuration.
///
/// Each dimension's bpp-bit segment is read MSB-first as an unsigned code
/// and mapped through DimensionSpec::decode_code. If every feature-mask bit
/// is zero the mask is repaired: the bit whose entry in `mask_repair_hint`
/// (per-feature P(1), when provided) is largest is forced to 1, ties and
/// missing hint falling back to the lowest index.
///
/// Throws std::invalid_argument when |bits| != space.total_bits().
HyperparamVector decode(const BitString& bits, const SpaceSpec& space,
                        std::span<const double> mask_repair_hint = {});

/// Nearest-code inverse of decode: decode(encode_point(h)) reproduces h
/// within one quantization step per dimension, exactly when h lies on a
/// code point. Throws std::domain_error for out-of-range fields.
BitString encode_point(const HyperparamVector& h, const SpaceSpec& space);

}  // namespace qibonn
