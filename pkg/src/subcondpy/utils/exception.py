#                     [ SUBCONDPY ]
# This code is developed to aid with tolerant closeness testing of
# distributions under subcube conditioning. All code is under the license
# provided along with the 'subcondpy' module.

from . import printer


class SubcondException (Exception):
    '''
    The Subcond Exception class defines a custom exception that is able
    to track errors within the library. Any invalid parameters, mismatched
    domains or exhausted query budgets will throw a subclass of this
    exception.
    '''

    def __init__ (self, message: str):
        '''
        Defines the constructor for the exception and is able to pass in
        some parameters in regards to the exception. This will also print
        the exception message.

        :param message:     The information error message that will be thrown.
        :type message:      str
        '''

        self._report(message)
        super().__init__(message)
        self.message = message

    def _report (self, message: str) -> None:
        '''
        Prints the message through the printer. Subclasses that signal an
        expected outcome can lower the level.

        :param message:     The message to print
        :type message:      str
        '''

        printer.error(message)

    def __str__ (self) -> str:
        '''
        This is the automated cast to a string from the message, which is
        able to return the exception information.

        :returns:   The string formatted text of the message
        :rtype:     str
        '''

        return "[SUBCOND ERROR] %s" % self.message


class BudgetExhausted (SubcondException):
    '''
    Raised when a query would take the meter past its budget. The tester
    turns this into a Reject verdict, so it is only printed as a warning.
    '''

    def _report (self, message: str) -> None:
        printer.warning(message)


class InvalidPrefix (SubcondException):
    '''Raised for prefixes that are too long or contain symbols outside the alphabet.'''


class DomainMismatch (SubcondException):
    '''Raised when two distributions or oracles do not share the same dimension and alphabet.'''


class DomainTooLarge (SubcondException):
    '''Raised when an enumeration would exceed the desk-scale guard.'''


class InvalidParameter (SubcondException):
    '''Raised for out-of-range accuracy, closeness, taming or count parameters.'''


class NonterminationSuspected (SubcondException):
    '''Raised when a negative binomial count passes its optional per-call trial cap.'''


class EvaluatorFailure (SubcondException):
    '''Raised when a probability evaluator returns a non-positive value for a sampled string.'''


class InfiniteExpectation (SubcondException):
    '''Raised when an expected query count is requested along a zero-probability marginal.'''


class ConfigError (SubcondException):
    '''Raised for invalid scenario configurations or model documents.'''
