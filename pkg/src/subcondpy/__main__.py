#                     [ SUBCONDPY ]
# This code is developed to aid with tolerant closeness testing of
# distributions under subcube conditioning. All code is under the license
# provided along with the 'subcondpy' module.

import sys
from .cli.main import main

sys.exit(main())
