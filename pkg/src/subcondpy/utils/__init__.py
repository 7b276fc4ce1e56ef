from .exception import SubcondException, BudgetExhausted, InvalidPrefix, DomainMismatch, DomainTooLarge, \
    InvalidParameter, NonterminationSuspected, EvaluatorFailure, InfiniteExpectation, ConfigError
