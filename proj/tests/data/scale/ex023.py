n = 0
s = eval(input())
n = n + s
s = eval(input())
n = n + s
s = eval(input())
n = n + s
print(n)
