"""相位协变量子克隆上下文"""
