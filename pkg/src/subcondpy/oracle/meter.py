#                     [ SUBCONDPY ]
# This code is developed to aid with tolerant closeness testing of
# distributions under subcube conditioning. All code is under the license
# provided along with the 'subcondpy' module.

from __future__ import annotations
from ..utils import printer, BudgetExhausted, InvalidParameter


class QueryMeter:
    '''
    The QueryMeter counts the conditional sampling queries issued through an
    oracle and enforces an optional hard budget. Meters may be chained to a
    parent, in which case every query is also charged to the parent and the
    tightest budget along the chain applies. This is how the tester shares a
    single budget between the two distributions.
    '''

    count: int = 0
    '''Defines the number of queries that have been issued so far.'''

    budget: int = None
    '''Defines the maximum number of queries, or None for no limit.'''

    parent: QueryMeter = None
    '''Defines the meter that is charged alongside this one.'''

    def __init__ (self, budget: int = None, parent: QueryMeter = None) -> None:
        '''
        Initialises the meter with an optional budget and parent.

        :param budget:  The hard ceiling on the number of queries
        :type budget:   int
        :param parent:  A meter to charge alongside this one
        :type parent:   QueryMeter
        '''

        if budget is not None and (int(budget) != budget or budget < 1):
            raise InvalidParameter(f"A query budget must be a positive integer, got {budget}.")
        self.count = 0
        self.budget = None if budget is None else int(budget)
        self.parent = parent

    def available (self) -> float:
        '''
        Returns the number of queries that may still be issued, taking all
        parent budgets into account.

        :returns:   The remaining queries, or infinity if unlimited
        :rtype:     float
        '''

        remaining = float("inf") if self.budget is None else float(self.budget - self.count)
        if self.parent is not None:
            remaining = min(remaining, self.parent.available())
        return remaining

    @property
    def exhausted (self) -> bool:
        return self.available() <= 0

    def grant (self, amount: int) -> int:
        '''
        Returns how many of the requested queries fit in the remaining
        budget, without charging any of them.

        :param amount:  The number of queries requested
        :type amount:   int

        :returns:       The number of queries that may be issued
        :rtype:         int
        '''

        return int(max(0, min(int(amount), self.available())))

    def charge (self, amount: int = 1) -> None:
        '''
        Charges queries that have been issued to the meter and its parents.
        A charge that does not fit in the budget is refused whole: nothing
        is counted and a BudgetExhausted exception is raised. Oracles that
        serve a batch only partially issue the granted part first and then
        call refuse for the rest.

        :param amount:  The number of queries to charge
        :type amount:   int
        '''

        amount = int(amount)
        if amount > self.available():
            self.refuse(amount)
        self.__add(amount)

    def refuse (self, amount: int) -> None:
        '''
        Signals that a number of queries could not be issued.

        :param amount:  The number of refused queries
        :type amount:   int
        '''

        raise BudgetExhausted(
            f"Query budget exhausted after {self.count} queries; {int(amount)} further queries were refused.")

    def __add (self, amount: int) -> None:
        '''
        Adds the granted queries to this meter and to every parent.

        :param amount:  The number of queries
        :type amount:   int
        '''

        meter = self
        while meter is not None:
            meter.count += amount
            meter = meter.parent

    def __repr__ (self) -> str:
        return f"QueryMeter(count={self.count}, budget={self.budget})"


def log_meter (name: str, meter: QueryMeter) -> None:
    '''
    Prints the state of a meter at log level.

    :param name:    A label for the meter
    :type name:     str
    :param meter:   The meter to print
    :type meter:    QueryMeter
    '''

    printer.log(f"Meter '{name}': {meter.count} queries issued, budget {meter.budget}.")
