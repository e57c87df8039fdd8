#pragma once

#include "fockcan/canon.hpp"

#include "json.hpp"

namespace fockcan {

enum class FlagKind { Tilting, Verma, Irreducible, Projective };

FlagKind parse_flag_kind(const std::string& name);
std::string flag_kind_str(FlagKind k);

struct FlagRow {
  Weight f;
  Int mult;
};

// Multiplicity rows of one highest weight module: Verma flag rows for a
// tilting or projective module, composition factors of a parabolic Verma
// module, or the alternating Verma expansion of an irreducible character.
struct FlagReport {
  Signature sig;
  FlagKind kind;
  Weight head;
  std::vector<FlagRow> rows;  // sorted by weight
  // True for the signature shapes whose multiplicity formulas this library
  // can certify independently; false elsewhere.
  bool proven = false;
};

FlagReport character_flag(const Signature& sig, FlagKind kind, const Weight& f,
                          const EngineOptions& opt = {});

// Dominant weights in the linkage class of head with all values inside
// [-bound, bound], sorted lexicographically.
std::vector<Weight> block_members(const Signature& sig, const Weight& head, int bound);

// Full structure report for the principal linkage class of the (1,1|1)
// signature: members, covering edges, the four multiplicity tables, and
// the projective tilting classification.
nlohmann::json gl21_block_report(int bound, EngineOptions opt = {});

}  // namespace fockcan
