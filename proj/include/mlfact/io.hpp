#pragma once

#include "mlfact/contexts.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mlfact::io {

/// Malformed input file: wrong header, token counts, or number syntax.
/// (Algebraically invalid but well-formed tables raise the structure's own
/// validation_error instead.)
class parse_error : public std::runtime_error {
 public:
  parse_error(std::string file, std::size_t line, const std::string& msg)
      : std::runtime_error(file + ":" + std::to_string(line) + ": " + msg),
        file_(std::move(file)),
        line_(line) {}

  const std::string& file() const { return file_; }
  std::size_t line() const { return line_; }

 private:
  std::string file_;
  std::size_t line_;
};

/// Which of the four concrete categories a parsed file belongs to.
enum class Kind { Ab, Grp, Ring, XMod };

const char* kind_name(Kind k);       // abgroup / fingroup / finring / xmod
const char* morphism_header(Kind k);  // hom / hom / ringhom / xmodhom

struct ParsedObject {
  Kind kind;
  ctx::Obj obj;
};

struct ParsedMorphism {
  Kind kind;
  std::string domain_file;    // path as written in the header line
  std::string codomain_file;  // path as written in the header line
  ctx::Mor mor;               // validated morphism
};

/// Parses a structure file from text. `filename` is used in error messages.
ParsedObject parse_object(const std::string& text,
                          const std::string& filename = "<input>");

/// Reads and parses a structure file.
ParsedObject read_object_file(const std::string& path);

/// Reads and parses a morphism file; the domain/codomain files named in its
/// header are resolved relative to the morphism file's directory.
ParsedMorphism read_morphism_file(const std::string& path);

/// Canonical text form; parse_object(print_object(x)) round-trips exactly.
std::string print_object(const ParsedObject& o);

/// Canonical text form of a morphism file (header uses the recorded
/// domain/codomain file names).
std::string print_morphism(const ParsedMorphism& m);

}  // namespace mlfact::io
