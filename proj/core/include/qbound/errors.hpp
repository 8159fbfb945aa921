#pragma once

#include <stdexcept>
#include <string>

namespace qbound {

/// Base class for every error this library raises on bad input.
/// The CLI maps any Error to exit code 2.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define QBOUND_DEFINE_ERROR(name)                                   \
    class name : public Error {                                     \
    public:                                                         \
        explicit name(const std::string& what) : Error(what) {}     \
    }

// function file / table construction
QBOUND_DEFINE_ERROR(SyntaxError);
QBOUND_DEFINE_ERROR(ArityMismatch);
QBOUND_DEFINE_ERROR(SymbolOutOfRange);
QBOUND_DEFINE_ERROR(DuplicateKey);
QBOUND_DEFINE_ERROR(ConstantFunction);
QBOUND_DEFINE_ERROR(EmptyDomain);
QBOUND_DEFINE_ERROR(WordNotInDomain);

// linear programming
QBOUND_DEFINE_ERROR(DimensionMismatch);

// measures
QBOUND_DEFINE_ERROR(ParameterOutOfRange);
QBOUND_DEFINE_ERROR(NonBooleanAlphabet);
QBOUND_DEFINE_ERROR(NonBooleanOutput);

// witness evaluation
QBOUND_DEFINE_ERROR(EmptyWitness);
QBOUND_DEFINE_ERROR(InvalidWitness);
QBOUND_DEFINE_ERROR(IncompleteFamily);
QBOUND_DEFINE_ERROR(NotADistribution);
QBOUND_DEFINE_ERROR(InvalidPartition);

// constructions
QBOUND_DEFINE_ERROR(OddArity);
QBOUND_DEFINE_ERROR(NotPrime);
QBOUND_DEFINE_ERROR(OrderTooLarge);
QBOUND_DEFINE_ERROR(DomainBudgetExceeded);
QBOUND_DEFINE_ERROR(BudgetExceeded);

#undef QBOUND_DEFINE_ERROR

}  // namespace qbound
