#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "longpath/graph.hpp"
#include "longpath/stream.hpp"

namespace longpath {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Edge-list text:
//   # graph directed=<0|1> n=<n>
//   u v            (tail head when directed)
void write_graph(std::ostream& out, const Graph& g);
Graph read_graph(std::istream& in);

// Stream text:
//   # stream directed=<0|1> n=<n>
//   + u v | - u v
void write_stream(std::ostream& out, const EventStream& s);
EventStream read_stream(std::istream& in);

// One line of space-separated vertex ids.
void write_path(std::ostream& out, const PathWitness& p);
PathWitness read_path(std::istream& in);

void save_graph(const std::filesystem::path& file, const Graph& g);
Graph load_graph(const std::filesystem::path& file);
void save_stream(const std::filesystem::path& file, const EventStream& s);
EventStream load_stream(const std::filesystem::path& file);
void save_path(const std::filesystem::path& file, const PathWitness& p);
PathWitness load_path(const std::filesystem::path& file);

}  // namespace longpath
