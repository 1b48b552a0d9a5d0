#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ppt {

enum class ErrorKind {
	NotATriple,
	NotPrimitive,
	InvalidParity,
	InvalidFraction,
	InvalidKeySequence,
	WrongParity,
	SecondaryRoot,
	NotInPrimaryTree,
	DegenerateIndex,
	Degenerate,
	Parse,
	Domain,
};

constexpr std::string_view error_name(ErrorKind kind)
{
	switch (kind) {
	case ErrorKind::NotATriple: return "NotATriple";
	case ErrorKind::NotPrimitive: return "NotPrimitive";
	case ErrorKind::InvalidParity: return "InvalidParity";
	case ErrorKind::InvalidFraction: return "InvalidFraction";
	case ErrorKind::InvalidKeySequence: return "InvalidKeySequence";
	case ErrorKind::WrongParity: return "WrongParity";
	case ErrorKind::SecondaryRoot: return "SecondaryRoot";
	case ErrorKind::NotInPrimaryTree: return "NotInPrimaryTree";
	case ErrorKind::DegenerateIndex: return "DegenerateIndex";
	case ErrorKind::Degenerate: return "Degenerate";
	case ErrorKind::Parse: return "ParseError";
	case ErrorKind::Domain: return "DomainError";
	}
	return "Error";
}

/// Every library failure is reported as this exception; kind() names the case.
class Error : public std::runtime_error {
public:
	Error(ErrorKind kind, const std::string& message)
		: std::runtime_error(message)
		, kind_(kind)
	{
	}

	ErrorKind kind() const noexcept { return kind_; }
	std::string_view name() const noexcept { return error_name(kind_); }

private:
	ErrorKind kind_;
};

} // namespace ppt
