from NegCat.Core.Manager.ReportManager import ReportManager

__all__ = ['ReportManager']
