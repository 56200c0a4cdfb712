#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace coregene {

enum class FeatureKind { CDS, RRNA, OTHER };

enum class AnnotationSource { NCBI_STYLE, DOGMA_STYLE };

/// One annotated coding sequence (or rRNA) of a genome.
/// seq_id has the form "<accession>:<ordinal>" and is the stable join key
/// across all modules and the similarity cache.
struct CodingSequence {
    std::string seq_id;
    std::optional<std::string> raw_name; // gene name as annotated, if any
    FeatureKind kind = FeatureKind::CDS;
    std::string dna;                     // uppercase, alphabet {A,C,G,T}

    friend bool operator==(const CodingSequence&, const CodingSequence&) = default;
};

struct Genome {
    std::string accession;
    std::string scientific_name;
    std::string family;
    AnnotationSource annotation_source = AnnotationSource::NCBI_STYLE;
    std::vector<CodingSequence> sequences; // file order, never empty

    friend bool operator==(const Genome&, const Genome&) = default;
};

std::string make_seq_id(std::string_view accession, std::size_t ordinal);

/// Splits "<accession>:<ordinal>"; throws InputError on malformed ids.
std::pair<std::string, std::size_t> parse_seq_id(std::string_view seq_id);

std::string to_string(FeatureKind kind);
std::string to_string(AnnotationSource source);

} // namespace coregene
