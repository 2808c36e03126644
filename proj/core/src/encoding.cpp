#include "qibonn/encoding.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "qibonn/errors.hpp"

namespace qibonn {

const std::vector<std::string> kArchDimNames = {
    "dropout",      "hidden_width",   "learning_rate",
    "batch_size",   "weight_decay",   "n_hidden_layers",
};

std::string bits_to_string(const BitString& bits) {
  std::string s;
  s.reserve(bits.size());
  for (auto b : bits) s.push_back(b ? '1' : '0');
  return s;
}

BitString bits_from_string(const std::string& s) {
  BitString bits;
  bits.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("bitstring may contain only '0'/'1'");
    }
    bits.push_back(c == '1' ? 1 : 0);
  }
  return bits;
}

std::string to_string(DimKind kind) {
  switch (kind) {
    case DimKind::Continuous: return "continuous";
    case DimKind::LogContinuous: return "log_continuous";
    case DimKind::IntegerRange: return "integer_range";
    case DimKind::CategoricalSet: return "categorical_set";
    case DimKind::BinaryFlag: return "binary_flag";
  }
  return "continuous";
}

DimKind dim_kind_from_string(const std::string& s) {
  if (s == "continuous") return DimKind::Continuous;
  if (s == "log_continuous") return DimKind::LogContinuous;
  if (s == "integer_range") return DimKind::IntegerRange;
  if (s == "categorical_set") return DimKind::CategoricalSet;
  if (s == "binary_flag") return DimKind::BinaryFlag;
  throw ConfigError("unknown dimension kind: " + s);
}

DimensionSpec DimensionSpec::continuous(std::string name, double lo, double hi,
                                        int bpp) {
  DimensionSpec d{std::move(name), DimKind::Continuous, lo, hi, {}, bpp};
  d.validate();
  return d;
}

DimensionSpec DimensionSpec::log_continuous(std::string name, double lo,
                                            double hi, int bpp) {
  DimensionSpec d{std::move(name), DimKind::LogContinuous, lo, hi, {}, bpp};
  d.validate();
  return d;
}

DimensionSpec DimensionSpec::integer_range(std::string name, int lo, int hi,
                                           int bpp) {
  DimensionSpec d{std::move(name), DimKind::IntegerRange,
                  static_cast<double>(lo), static_cast<double>(hi), {}, bpp};
  d.validate();
  return d;
}

DimensionSpec DimensionSpec::categorical(std::string name,
                                         std::vector<double> choices,
                                         int bpp) {
  DimensionSpec d{std::move(name), DimKind::CategoricalSet, 0.0, 0.0,
                  std::move(choices), bpp};
  d.validate();
  return d;
}

DimensionSpec DimensionSpec::binary_flag(std::string name) {
  DimensionSpec d{std::move(name), DimKind::BinaryFlag, 0.0, 1.0, {}, 1};
  return d;
}

void DimensionSpec::validate() const {
  if (name.empty()) throw ConfigError("dimension needs a name");
  if (bpp < 1 || bpp > 24) {
    throw ConfigError("dimension '" + name + "': bpp must lie in [1,24]");
  }
  switch (kind) {
    case DimKind::Continuous:
    case DimKind::IntegerRange:
      if (!(lo < hi)) {
        throw ConfigError("dimension '" + name + "': requires lo < hi");
      }
      break;
    case DimKind::LogContinuous:
      if (!(lo < hi)) {
        throw ConfigError("dimension '" + name + "': requires lo < hi");
      }
      if (!(lo > 0.0)) {
        throw ConfigError("dimension '" + name +
                          "': log scale requires lo > 0");
      }
      break;
    case DimKind::CategoricalSet:
      if (choices.empty()) {
        throw ConfigError("dimension '" + name + "': empty choice set");
      }
      break;
    case DimKind::BinaryFlag:
      if (bpp != 1) {
        throw ConfigError("dimension '" + name + "': binary flags use 1 bit");
      }
      break;
  }
}

namespace {

double round_half_up(double x) { return std::floor(x + 0.5); }

// encode_value ties go to the lower code, so its rounding is half-down.
double round_half_down(double x) { return std::ceil(x - 0.5); }

}  // namespace

double DimensionSpec::decode_code(std::uint64_t v) const {
  const std::uint64_t m = max_code();
  if (v > m) throw std::invalid_argument("code exceeds 2^bpp-1");
  const double t = m == 0 ? 0.0 : static_cast<double>(v) / static_cast<double>(m);
  switch (kind) {
    case DimKind::Continuous:
      if (v == 0) return lo;
      if (v == m) return hi;
      return lo + t * (hi - lo);
    case DimKind::LogContinuous: {
      if (v == 0) return lo;
      if (v == m) return hi;
      const double llo = std::log10(lo), lhi = std::log10(hi);
      return std::pow(10.0, llo + t * (lhi - llo));
    }
    case DimKind::IntegerRange:
      return round_half_up(lo + t * (hi - lo));
    case DimKind::CategoricalSet: {
      const auto last = static_cast<double>(choices.size() - 1);
      const auto idx = static_cast<std::size_t>(round_half_up(t * last));
      return choices[idx];
    }
    case DimKind::BinaryFlag:
      return v ? 1.0 : 0.0;
  }
  return lo;
}

std::uint64_t DimensionSpec::encode_value(double value) const {
  const std::uint64_t m = max_code();
  switch (kind) {
    case DimKind::Continuous: {
      if (!(value >= lo && value <= hi)) {
        throw std::domain_error("dimension '" + name + "': value " +
                                std::to_string(value) + " outside range");
      }
      const double t = (value - lo) / (hi - lo);
      const auto v = static_cast<std::uint64_t>(
          std::max(0.0, round_half_down(t * static_cast<double>(m))));
      return std::min(v, m);
    }
    case DimKind::LogContinuous: {
      if (!(value >= lo && value <= hi)) {
        throw std::domain_error("dimension '" + name + "': value " +
                                std::to_string(value) + " outside range");
      }
      const double llo = std::log10(lo), lhi = std::log10(hi);
      const double t = (std::log10(value) - llo) / (lhi - llo);
      const auto v = static_cast<std::uint64_t>(std::max(
          0.0, round_half_down(t * static_cast<double>(m))));
      return std::min(v, m);
    }
    case DimKind::IntegerRange:
    case DimKind::CategoricalSet: {
      if (kind == DimKind::IntegerRange && !(value >= lo && value <= hi)) {
        throw std::domain_error("dimension '" + name + "': value " +
                                std::to_string(value) + " outside range");
      }
      if (kind == DimKind::CategoricalSet) {
        const bool member =
            std::any_of(choices.begin(), choices.end(),
                        [&](double c) { return c == value; });
        if (!member) {
          throw std::domain_error("dimension '" + name + "': value " +
                                  std::to_string(value) +
                                  " is not one of the declared choices");
        }
      }
      // Scan all codes for the closest decoded value; exact inverse
      // wherever the code->value map is injective.
      std::uint64_t best = 0;
      double best_err = std::abs(decode_code(0) - value);
      for (std::uint64_t v = 1; v <= m; ++v) {
        const double err = std::abs(decode_code(v) - value);
        if (err < best_err) {
          best = v;
          best_err = err;
        }
      }
      return best;
    }
    case DimKind::BinaryFlag:
      if (value != 0.0 && value != 1.0) {
        throw std::domain_error("dimension '" + name +
                                "': binary flag must be 0 or 1");
      }
      return value == 1.0 ? 1 : 0;
  }
  return 0;
}

int HyperparamVector::mask_popcount() const {
  int n = 0;
  for (auto b : feature_mask) n += b ? 1 : 0;
  return n;
}

std::string HyperparamVector::canonical_repr() const {
  char buf[160];
  std::snprintf(buf, sizeof buf, "|%.17g|%d|%.17g|%d|%.17g|%d", dropout,
                hidden_width, learning_rate, batch_size, weight_decay,
                n_hidden_layers);
  std::string s = bits_to_string(feature_mask);
  s += buf;
  return s;
}

SpaceSpec SpaceSpec::make(int n_feat, std::vector<DimensionSpec> dims) {
  SpaceSpec space{n_feat, std::move(dims)};
  space.validate();
  return space;
}

void SpaceSpec::validate() const {
  if (n_feat < 1) throw ConfigError("space requires n_feat >= 1");
  if (static_cast<int>(dims.size()) < n_feat) {
    throw ConfigError("space has fewer dims than n_feat");
  }
  for (int i = 0; i < n_feat; ++i) {
    if (dims[i].kind != DimKind::BinaryFlag) {
      throw ConfigError("space dims 0.." + std::to_string(n_feat - 1) +
                        " must be binary feature flags");
    }
  }
  for (const auto& d : dims) d.validate();
  for (const auto& name : kArchDimNames) {
    const bool found = std::any_of(
        dims.begin() + n_feat, dims.end(),
        [&](const DimensionSpec& d) { return d.name == name; });
    if (!found) {
      throw ConfigError("space is missing architecture dimension '" + name +
                        "'");
    }
  }
}

int SpaceSpec::total_bits() const {
  int n = 0;
  for (const auto& d : dims) n += d.bpp;
  return n;
}

int SpaceSpec::bit_offset(std::size_t dim_index) const {
  int off = 0;
  for (std::size_t i = 0; i < dim_index; ++i) off += dims[i].bpp;
  return off;
}

const DimensionSpec& SpaceSpec::dim_named(const std::string& name) const {
  for (const auto& d : dims) {
    if (d.name == name) return d;
  }
  throw ConfigError("no dimension named '" + name + "'");
}

SpaceSpec default_space(int n_feat) {
  std::vector<DimensionSpec> dims;
  dims.reserve(static_cast<std::size_t>(n_feat) + 6);
  for (int i = 0; i < n_feat; ++i) {
    dims.push_back(DimensionSpec::binary_flag("mask_" + std::to_string(i)));
  }
  dims.push_back(DimensionSpec::continuous("dropout", 0.0, 0.5, 8));
  dims.push_back(DimensionSpec::integer_range("hidden_width", 8, 64, 6));
  dims.push_back(DimensionSpec::log_continuous("learning_rate", 1e-4, 1e-1, 8));
  dims.push_back(DimensionSpec::categorical(
      "batch_size", {32, 48, 64, 96, 128, 192, 256, 384}, 3));
  dims.push_back(DimensionSpec::log_continuous("weight_decay", 1e-6, 1e-2, 8));
  dims.push_back(DimensionSpec::integer_range("n_hidden_layers", 1, 4, 2));
  return SpaceSpec::make(n_feat, std::move(dims));
}

namespace {

std::uint64_t segment_code(const BitString& bits, int offset, int bpp) {
  std::uint64_t v = 0;
  for (int i = 0; i < bpp; ++i) {
    v = (v << 1) | (bits[static_cast<std::size_t>(offset + i)] ? 1u : 0u);
  }
  return v;
}

void write_segment(BitString& bits, int offset, int bpp, std::uint64_t v) {
  for (int i = 0; i < bpp; ++i) {
    bits[static_cast<std::size_t>(offset + i)] =
        (v >> (bpp - 1 - i)) & 1u ? 1 : 0;
  }
}

}  // namespace

HyperparamVector decode(const BitString& bits, const SpaceSpec& space,
                        std::span<const double> mask_repair_hint) {
  if (static_cast<int>(bits.size()) != space.total_bits()) {
    throw std::invalid_argument(
        "decode: bitstring length " + std::to_string(bits.size()) +
        " does not match space total_bits " +
        std::to_string(space.total_bits()));
  }
  HyperparamVector h;
  h.feature_mask.assign(static_cast<std::size_t>(space.n_feat), 0);
  int offset = 0;
  for (std::size_t i = 0; i < space.dims.size(); ++i) {
    const auto& d = space.dims[i];
    const double value = d.decode_code(segment_code(bits, offset, d.bpp));
    offset += d.bpp;
    if (static_cast<int>(i) < space.n_feat) {
      h.feature_mask[i] = value == 1.0 ? 1 : 0;
      continue;
    }
    if (d.name == "dropout") {
      h.dropout = value;
    } else if (d.name == "hidden_width") {
      h.hidden_width = static_cast<int>(std::llround(value));
    } else if (d.name == "learning_rate") {
      h.learning_rate = value;
    } else if (d.name == "batch_size") {
      h.batch_size = static_cast<int>(std::llround(value));
    } else if (d.name == "weight_decay") {
      h.weight_decay = value;
    } else if (d.name == "n_hidden_layers") {
      h.n_hidden_layers = static_cast<int>(std::llround(value));
    }
    // Unrecognized extra dimensions are decoded and ignored.
  }
  if (h.mask_popcount() == 0) {
    // An empty feature set leaves the inner problem undefined; force the
    // single most-probable feature bit (lowest index on ties / no hint).
    std::size_t pick = 0;
    if (mask_repair_hint.size() == static_cast<std::size_t>(space.n_feat)) {
      for (std::size_t i = 1; i < mask_repair_hint.size(); ++i) {
        if (mask_repair_hint[i] > mask_repair_hint[pick]) pick = i;
      }
    }
    h.feature_mask[pick] = 1;
  }
  return h;
}

BitString encode_point(const HyperparamVector& h, const SpaceSpec& space) {
  if (static_cast<int>(h.feature_mask.size()) != space.n_feat) {
    throw std::domain_error("encode_point: feature mask length mismatch");
  }
  BitString bits(static_cast<std::size_t>(space.total_bits()), 0);
  int offset = 0;
  for (std::size_t i = 0; i < space.dims.size(); ++i) {
    const auto& d = space.dims[i];
    double value = 0.0;
    if (static_cast<int>(i) < space.n_feat) {
      value = h.feature_mask[i] ? 1.0 : 0.0;
    } else if (d.name == "dropout") {
      value = h.dropout;
    } else if (d.name == "hidden_width") {
      value = h.hidden_width;
    } else if (d.name == "learning_rate") {
      value = h.learning_rate;
    } else if (d.name == "batch_size") {
      value = h.batch_size;
    } else if (d.name == "weight_decay") {
      value = h.weight_decay;
    } else if (d.name == "n_hidden_layers") {
      value = h.n_hidden_layers;
    } else {
      offset += d.bpp;
      continue;
    }
    write_segment(bits, offset, d.bpp, d.encode_value(value));
    offset += d.bpp;
  }
  return bits;
}

}  // namespace qibonn
