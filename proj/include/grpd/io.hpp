#ifndef GRPD_IO_HPP
#define GRPD_IO_HPP

#include <string>

#include "grpd/groupoid.hpp"

namespace grpd {

// Text formats, all line based and canonical (single spaces, one trailing
// newline), so serialize . parse . serialize is the identity:
//
//   group:           "order n", n table rows, optional "name <name>"
//   reflexive graph: group block, "s: <n indices>", "t: <n indices>"
//   crossed module:  T block, G block, "d: <|T| indices>",
//                    |G| action rows of |T| indices each
//
// Parsers throw Error(ParseError) on malformed input; structural validation
// is delegated to the constructors, so their error kinds pass through.

std::string group_to_text(const GroupPtr &g);
GroupPtr group_from_text(const std::string &text);

std::string rgraph_to_text(const ReflexiveGraph &g);
ReflexiveGraph rgraph_from_text(const std::string &text);

std::string xmod_to_text(const CrossedModule &m);
CrossedModule xmod_from_text(const std::string &text);

// Base graph plus its action on the kernel, one "a:" row per base element.
// Output-only companion format for the classifier commands.
std::string classifier_to_text(const ReflexiveGraph &base, const Action &act);

enum class FileKind { Group, RGraph, Xmod };
FileKind detect_kind(const std::string &text);

std::string read_file(const std::string &path);
void write_file(const std::string &path, const std::string &text);

} // namespace grpd

#endif // GRPD_IO_HPP
