#pragma once

#include "symquot/classify.hpp"

#include <string>

namespace symquot {

enum class ReportFormat { Json, Tsv, Text };

ReportFormat parse_format(const std::string& s);

/// Renderers are deterministic byte-for-byte for fixed inputs; timing is
/// only emitted when timing_ms is nonnegative (the --timing flag).
std::string render_classification(const GroupClassification& C, ReportFormat fmt,
                                  long timing_ms = -1);
std::string render_corpus(const CorpusReport& R, ReportFormat fmt, long timing_ms = -1);
std::string render_verify(const VerifyResult& V, ReportFormat fmt, long timing_ms = -1);
std::string render_table(const CharacterTable& T, ReportFormat fmt);

}  // namespace symquot
