"""Mazur - exact Banach-Mazur games on sequences of compact sets and the transfer of
Player II strategies between the product game and the increasing game.
:copyright: 2026 by the Mazur authors
:license: MIT, see LICENSE for more details.
"""

__version__ = "0.0.1"
__project__ = "Mazur"
__author__ = "Mazur authors"
__license__ = "MIT"
__email__ = "mazur@example.org"
