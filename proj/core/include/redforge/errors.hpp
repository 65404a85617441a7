#pragma once

#include <stdexcept>
#include <string>

namespace redforge {

/** Base class for every error raised by the library. */
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/** The two edges handed to a reduction do not form a path (i,j),(j,k) with i<j<k. */
class NotComposable : public Error {
 public:
  explicit NotComposable(const std::string& what) : Error(what) {}
};

/** An edge (endpoints plus provenance) is not present in the graph. */
class EdgeAbsent : public Error {
 public:
  explicit EdgeAbsent(const std::string& what) : Error(what) {}
};

/** Two graphs carry provenance relative to different roots. */
class RootMismatch : public Error {
 public:
  explicit RootMismatch(const std::string& what) : Error(what) {}
};

/** A graph or edge list violates a structural requirement (loop, bad endpoint). */
class InvalidGraph : public Error {
 public:
  explicit InvalidGraph(const std::string& what) : Error(what) {}
};

/** The node budget of a tree construction or search was exhausted. */
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

/** An operation was called outside the hypothesis under which it is defined. */
class ScopeError : public Error {
 public:
  explicit ScopeError(const std::string& what) : Error(what) {}
};

/** A leaf passed where a full-dimensional leaf is required. */
class NotFullDim : public Error {
 public:
  explicit NotFullDim(const std::string& what) : Error(what) {}
};

/** A provenance multiset does not chain into a path between the edge endpoints. */
class BadProvenance : public Error {
 public:
  explicit BadProvenance(const std::string& what) : Error(what) {}
};

/** A c-vector was asked to rewrite slots for edges it does not hold. */
class SlotMismatch : public Error {
 public:
  explicit SlotMismatch(const std::string& what) : Error(what) {}
};

/** Malformed serialized input (graph, replay, polynomial). */
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace redforge
