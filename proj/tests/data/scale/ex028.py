n = eval(input())
s = eval(input())
print(n and s)
print(n or s)
print(not n)
print(n != s)
print(1 if n and not s else 0)
