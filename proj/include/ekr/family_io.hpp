#pragma once

// Family file format.
//
//   text:  first line "n k", then one member per line as strictly ascending
//          space-separated elements.
//   bits:  first line "n k", then one member per line as a lowercase hex
//          bitmask, bit 0 = element 1.
//
// Members are written in lex order, so serialize(parse(f)) == f for any
// canonical file. Parsing rejects duplicates, wrong set sizes, elements
// outside [n] and unordered text rows.

#include <iosfwd>
#include <string>
#include <string_view>

#include "ekr/family.hpp"

namespace ekr {

enum class FamilyFormat { text, bits };

FamilyFormat parse_format_name(std::string_view name);

Family parse_family(std::string_view contents, FamilyFormat format = FamilyFormat::text);
Family read_family(std::istream& in, FamilyFormat format = FamilyFormat::text);
Family read_family_file(const std::string& path, FamilyFormat format = FamilyFormat::text);

std::string format_family(const Family& family, FamilyFormat format = FamilyFormat::text);
void write_family_file(const std::string& path, const Family& family,
                       FamilyFormat format = FamilyFormat::text);

/// "1,2,9", "1 2 9" or "{1,2,9}" as an element set.
ElementSet parse_element_set(std::string_view literal);

}  // namespace ekr
