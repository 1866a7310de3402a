# Copyright (c) 2024, The hitset authors. All rights reserved.
# See file LICENSE for terms.

__version__ = "0.3.0"
